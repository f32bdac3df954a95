"""Symbolic matrices whose entries are 0, 1 or a signed elementary symmetric
polynomial over a contiguous window of variables X_r, ..., X_{r+u}.

That entry shape covers the diagonal matrices D, the generalized companion
matrices R_l and the block lower triangular matrices P built from them, so
no general polynomial ring is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import ONE, ZERO, elem_sym_all, exact
from .errors import ArgumentError, ArityError
from .linalg import Matrix
from .partition import Partition, stack_decomposition


@dataclass(frozen=True)
class ElemSym:
    """``sign * e_degree(X_first, ..., X_last)`` with 1-based variable indices."""

    sign: int
    degree: int
    first: int
    last: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ArgumentError("sign must be +1 or -1")
        if not 1 <= self.degree <= self.last - self.first + 1:
            raise ArgumentError("degree exceeds window length")

    def evaluate(self, values: Sequence):
        window = list(values[self.first - 1:self.last])
        e = elem_sym_all(window, ONE if not isinstance(window[0], complex) else complex(1))[self.degree]
        return e if self.sign > 0 else -e

    def __str__(self):
        sign = "-" if self.sign < 0 else ""
        if self.degree == 1 and self.first == self.last:
            return f"{sign}X_{self.first}"
        return f"{sign}e_{self.degree}(X_{self.first}..X_{self.last})"


def var(i: int) -> ElemSym:
    return ElemSym(1, 1, i, i)


@dataclass(frozen=True)
class SymbolicMatrix:
    """n x n grid of entries (0, 1 or :class:`ElemSym`) in ``nvars`` variables."""

    entries: tuple
    nvars: int

    def __post_init__(self):
        for row in self.entries:
            for x in row:
                if isinstance(x, ElemSym):
                    if not 1 <= x.first <= x.last <= self.nvars:
                        raise ArgumentError(f"window of {x} outside X_1..X_{self.nvars}")
                elif x not in (0, 1):
                    raise ArgumentError(f"invalid symbolic entry {x!r}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def ones(self) -> frozenset:
        """0-based positions of constant 1 entries (the shift support)."""
        return frozenset((i, j) for i, r in enumerate(self.entries) for j, x in enumerate(r)
                         if not isinstance(x, ElemSym) and x == 1)

    def variable_positions(self) -> frozenset:
        return frozenset((i, j) for i, r in enumerate(self.entries) for j, x in enumerate(r)
                         if isinstance(x, ElemSym))

    def __str__(self):
        cells = [["0" if (not isinstance(x, ElemSym) and x == 0) else str(x) for x in r]
                 for r in self.entries]
        width = max(len(c) for r in cells for c in r)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)


def _grid(n):
    return [[0] * n for _ in range(n)]


def _freeze(grid, nvars):
    return SymbolicMatrix(tuple(tuple(r) for r in grid), nvars)


def build_d(pi: Partition) -> SymbolicMatrix:
    """Block diagonal ``X_1 E_{n_1} + ... + X_d E_{n_d}``."""
    grid = _grid(pi.n)
    for k, (off, size) in enumerate(zip(pi.offsets(), pi.parts), start=1):
        for r in range(size):
            grid[off + r][off + r] = var(k)
    return _freeze(grid, pi.d)


def build_r(first: int, length: int, nvars: int | None = None) -> SymbolicMatrix:
    """Generalized companion matrix R_l over X_first .. X_{first+l-1}.

    Subdiagonal ones; last column, row k (0-based), holds
    ``(-1)**(l-k+1) * e_{l-k}``.
    """
    if length < 1:
        raise ArgumentError("companion size must be >= 1")
    last = first + length - 1
    grid = _grid(length)
    for k in range(1, length):
        grid[k][k - 1] = 1
    for k in range(length):
        deg = length - k
        grid[k][length - 1] = ElemSym(1 if (deg + 1) % 2 == 0 else -1, deg, first, last)
    return _freeze(grid, nvars if nvars is not None else last)


def build_p(pi: Partition) -> SymbolicMatrix:
    """The block lower triangular matrix P for ``pi``.

    Starts from D; inserts ``F = [O | E_{n_{j+1}}]`` below-left of every
    drop ``n_j > n_{j+1}``; then replaces each stack's diagonal run by
    ``R_{u+1}(X_r..X_{r+u}) (x) E_m``.
    """
    grid = [list(r) for r in build_d(pi).entries]
    offs, parts = pi.offsets(), pi.parts
    for j in range(pi.d - 1):
        big, small = parts[j], parts[j + 1]
        if big > small:
            for r in range(small):
                grid[offs[j + 1] + r][offs[j] + big - small + r] = 1
    stacks = stack_decomposition(pi)
    for js in range(stacks.t):
        m, l, p0 = stacks.m[js], stacks.l[js], stacks.first_part[js]
        base = offs[p0]
        comp = build_r(p0 + 1, l)
        for a in range(l):
            for b in range(l):
                entry = comp.entries[a][b]
                for r in range(m):
                    grid[base + a * m + r][base + b * m + r] = entry
    return _freeze(grid, pi.d)


def substitute(p: SymbolicMatrix, values: Sequence, mode: str | None = None) -> Matrix:
    """Evaluate every entry at ``X_k = values[k-1]``."""
    values = list(values)
    if len(values) != p.nvars:
        raise ArityError(f"expected {p.nvars} values, got {len(values)}")
    if mode is None:
        mode = "numeric" if any(isinstance(v, (float, complex)) for v in values) else "exact"
    conv = exact if mode == "exact" else complex
    values = [conv(v) for v in values]
    zero, one = (ZERO, ONE) if mode == "exact" else (0j, 1 + 0j)
    rows = []
    for r in p.entries:
        row = []
        for x in r:
            if isinstance(x, ElemSym):
                row.append(x.evaluate(values))
            else:
                row.append(one if x == 1 else zero)
        rows.append(tuple(row))
    return Matrix._raw(tuple(rows), mode)


__all__ = [
    "ElemSym",
    "SymbolicMatrix",
    "build_d",
    "build_p",
    "build_r",
    "substitute",
    "var",
]
