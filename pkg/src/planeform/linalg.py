"""Dense square matrices over one scalar mode, with exact and numeric rank.

Exact rank scales the matrix to Gaussian integers and runs fraction-free
elimination on (re, im) int pairs, which is far cheaper than elimination on
rational objects. Numeric rank uses singular values.
"""

from __future__ import annotations

from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .arith import (
    DEFAULT_TOL,
    EXACT,
    NUMERIC,
    ONE,
    ZERO,
    GaussianRational,
    MonicPoly,
    close,
    exact,
    format_scalar,
    is_zero,
)
from .errors import ArgumentError


class Matrix:
    """Immutable n x n matrix. ``mode`` is ``"exact"`` or ``"numeric"``."""

    __slots__ = ("rows", "mode")

    def __init__(self, rows: Iterable[Iterable], mode: str | None = None):
        rows = [list(r) for r in rows]
        if mode is None:
            flat = [x for r in rows for x in r]
            mode = NUMERIC if any(isinstance(x, (float, complex)) for x in flat) else EXACT
        conv = exact if mode == EXACT else complex
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ArgumentError("matrix must be square")
        self.rows = tuple(tuple(conv(x) for x in r) for r in rows)
        self.mode = mode

    @classmethod
    def _raw(cls, rows, mode):
        obj = object.__new__(cls)
        obj.rows = rows
        obj.mode = mode
        return obj

    @classmethod
    def zeros(cls, n: int, mode: str = EXACT) -> "Matrix":
        z = ZERO if mode == EXACT else 0j
        return cls._raw(tuple((z,) * n for _ in range(n)), mode)

    @classmethod
    def identity(cls, n: int, mode: str = EXACT) -> "Matrix":
        z, o = (ZERO, ONE) if mode == EXACT else (0j, 1 + 0j)
        return cls._raw(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), mode)

    @classmethod
    def from_entries(cls, n: int, entries: dict, mode: str = EXACT) -> "Matrix":
        """Build from a sparse ``{(row, col): value}`` map with 0-based indices."""
        z = ZERO if mode == EXACT else 0j
        conv = exact if mode == EXACT else complex
        grid = [[z] * n for _ in range(n)]
        for (i, j), v in entries.items():
            grid[i][j] = conv(v)
        return cls._raw(tuple(tuple(r) for r in grid), mode)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def to_mode(self, mode: str) -> "Matrix":
        if mode == self.mode:
            return self
        return Matrix(self.rows, mode)

    def tolist(self) -> list:
        return [list(r) for r in self.rows]

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(x) for x in r] for r in self.rows], dtype=complex).reshape(self.n, self.n)

    # -- algebra -----------------------------------------------------------
    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            raise TypeError("expected a Matrix")
        if other.n != self.n:
            raise ArgumentError("size mismatch")
        if other.mode != self.mode:
            raise ArgumentError("cannot mix exact and numeric matrices")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                           self.mode)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                           self.mode)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows), self.mode)

    def scale(self, c) -> "Matrix":
        c = exact(c) if self.mode == EXACT else complex(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self.rows), self.mode)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.mode == NUMERIC:
            prod = self.to_numpy() @ other.to_numpy()
            return Matrix._raw(tuple(tuple(complex(x) for x in r) for r in prod), NUMERIC)
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = ZERO
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return Matrix._raw(tuple(out), EXACT)

    def apply(self, v: Sequence) -> list:
        return [sum((a * x for a, x in zip(r, v)), ZERO if self.mode == EXACT else 0j) for r in self.rows]

    def shift(self, lam) -> "Matrix":
        """``self - lam * I``."""
        lam = exact(lam) if self.mode == EXACT else complex(lam)
        return Matrix._raw(tuple(tuple(a - lam if i == j else a for j, a in enumerate(r))
                                 for i, r in enumerate(self.rows)), self.mode)

    def permuted(self, perm: Sequence[int]) -> "Matrix":
        """``Q A Q^-1`` for the permutation sending position k to ``perm[k]``."""
        return Matrix._raw(tuple(tuple(self.rows[i][j] for j in perm) for i in perm), self.mode)

    def submatrix(self, idx: Sequence[int]) -> "Matrix":
        return self.permuted(idx)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.mode == other.mode and self.rows == other.rows

    def __hash__(self):
        return hash((self.mode, self.rows))

    def allclose(self, other: "Matrix", tol: float = DEFAULT_TOL) -> bool:
        if other.n != self.n:
            return False
        return all(close(a, b, tol) for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def support(self, tol: float = DEFAULT_TOL) -> frozenset:
        return frozenset((i, j) for i, r in enumerate(self.rows) for j, x in enumerate(r) if not is_zero(x, tol))

    def __repr__(self):
        return f"Matrix({self.n}x{self.n}, {self.mode})"

    def __str__(self):
        cells = [[format_scalar(x) if x else "." for x in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def direct_sum(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise ArgumentError("empty direct sum")
    mode = blocks[0].mode
    n = sum(b.n for b in blocks)
    entries, off = {}, 0
    for b in blocks:
        for i, r in enumerate(b.rows):
            for j, x in enumerate(r):
                if x:
                    entries[(off + i, off + j)] = x
        off += b.n
    return Matrix.from_entries(n, entries, mode)


# -- exact kernels on Gaussian integers ----------------------------------------

def _gaussian_integer_rows(rows) -> list:
    """Scale a Gaussian-rational matrix by one common denominator."""
    den = lcm(*(int(x.re.denominator) for r in rows for x in r),
              *(int(x.im.denominator) for r in rows for x in r))
    return [[(int(x.re * den), int(x.im * den)) for x in r] for r in rows]


def _gi_matmul(a: list, b: list) -> list:
    cols = list(zip(*b))
    out = []
    for r in a:
        row = []
        for c in cols:
            re = im = 0
            for (p, q), (s, t) in zip(r, c):
                if p or q:
                    re += p * s - q * t
                    im += p * t + q * s
            row.append((re, im))
        out.append(row)
    return out


def _gi_rank(rows: list) -> int:
    rows = [list(r) for r in rows if any(x != (0, 0) for x in r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((k for k in range(rank, len(rows)) if rows[k][col] != (0, 0)), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr, pi = rows[rank][col]
        prow = rows[rank]
        for k in range(rank + 1, len(rows)):
            qr, qi = rows[k][col]
            if not qr and not qi:
                continue
            new = []
            g = 0
            for (xr, xi), (yr, yi) in zip(rows[k], prow):
                re = pr * xr - pi * xi - (qr * yr - qi * yi)
                im = pr * xi + pi * xr - (qr * yi + qi * yr)
                new.append((re, im))
                g = gcd(g, re, im)
            if g > 1:
                new = [(re // g, im // g) for re, im in new]
            rows[k] = new
        rank += 1
        if rank == len(rows):
            break
    return rank


def _numeric_rank(a: np.ndarray, tol: float) -> int:
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    return int(np.sum(s > tol * max(1.0, s[0]) * a.shape[0]))


def rank(m: Matrix, tol: float = DEFAULT_TOL) -> int:
    if m.mode == EXACT:
        return _gi_rank(_gaussian_integer_rows(m.rows))
    return _numeric_rank(m.to_numpy(), tol)


def rank_of_columns(vectors: Sequence[Sequence], mode: str = EXACT, tol: float = DEFAULT_TOL) -> int:
    """Rank of the matrix whose columns are ``vectors`` (any shape)."""
    if not vectors:
        return 0
    if mode == EXACT:
        return _gi_rank(_gaussian_integer_rows([[exact(x) for x in v] for v in vectors]))
    return _numeric_rank(np.array([[complex(x) for x in v] for v in vectors]), tol)


def nullity_chain(m: Matrix, limit: int, tol: float = DEFAULT_TOL) -> list:
    """``[nullity(m**1), nullity(m**2), ...]`` until it repeats or reaches ``limit``."""
    n = m.n
    chain = []
    if m.mode == EXACT:
        base = _gaussian_integer_rows(m.rows)
        power = base
        while True:
            nu = n - _gi_rank(power)
            if (chain and nu == chain[-1]) or len(chain) > n:
                break
            chain.append(nu)
            if nu >= limit:
                break
            power = _gi_matmul(power, base)
            # keep entries small: rank is invariant under scaling by the content
            g = 0
            for r in power:
                for re, im in r:
                    g = gcd(g, re, im)
            if g > 1:
                power = [[(re // g, im // g) for re, im in r] for r in power]
    else:
        base = m.to_numpy()
        power = base
        while True:
            nu = n - _numeric_rank(power, tol)
            if (chain and nu == chain[-1]) or len(chain) > n:
                break
            chain.append(nu)
            if nu >= limit:
                break
            power = power @ base
    return chain


def inverse(m: Matrix) -> Matrix:
    """Exact Gauss-Jordan inverse (or numpy's in numeric mode)."""
    n = m.n
    if m.mode != EXACT:
        return Matrix(np.linalg.inv(m.to_numpy()).tolist(), NUMERIC)
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.rows)]
    for col in range(n):
        pivot = next((k for k in range(col, n) if aug[k][col]), None)
        if pivot is None:
            raise ArgumentError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = ONE / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for k in range(n):
            f = aug[k][col]
            if k != col and f:
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[col])]
    return Matrix._raw(tuple(tuple(r[n:]) for r in aug), EXACT)


def charpoly(m: Matrix) -> MonicPoly:
    """Characteristic polynomial det(X I - m) as a :class:`MonicPoly`.

    Exact mode uses the Faddeev-LeVerrier recurrence (characteristic zero).
    """
    n = m.n
    if m.mode != EXACT:
        c = np.poly(m.to_numpy())  # descending, c[0] = 1
        asc = [complex(x) for x in c[::-1]]
        return MonicPoly(tuple(-x for x in asc[:-1]))
    # c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I;  c_{n-k} = -tr(A M_k) / k
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = Matrix.zeros(n)
    eye = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk + eye.scale(coeffs[n - k + 1])
        amk = m @ mk
        trace = sum((amk[i, i] for i in range(n)), ZERO)
        coeffs[n - k] = -trace / k
    return MonicPoly(tuple(-c for c in coeffs[:-1]))


def krylov_rank(m: Matrix, v: Sequence, tol: float = DEFAULT_TOL) -> int:
    """Rank of ``[v | m v | ... | m**(n-1) v]``."""
    vecs = [list(v)]
    for _ in range(m.n - 1):
        vecs.append(m.apply(vecs[-1]))
    return rank_of_columns(vecs, m.mode, tol)


def conjugate_by(m: Matrix, q: Matrix, q_inv: Matrix | None = None) -> Matrix:
    """``q m q^-1``."""
    if q_inv is None:
        q_inv = inverse(q)
    return q @ m @ q_inv


__all__ = [
    "Matrix",
    "charpoly",
    "conjugate_by",
    "direct_sum",
    "inverse",
    "krylov_rank",
    "nullity_chain",
    "rank",
    "rank_of_columns",
]
