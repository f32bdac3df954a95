"""Jordan forms, Weyr characteristics, and the two conversions between
canonical plane matrices and Jordan data.

Plane -> Jordan goes through the stack equations: if ``mu(lam, j)`` is the
multiplicity of ``lam`` as a root of stack j and ``alpha(lam, j)`` its
running total over stacks ``1..j``, the plane matrix is similar to the
direct sum over j of ``(m_j - m_{j+1})`` copies of ``J_{alpha(lam, j)}(lam)``.

Matrix -> plane goes through the Weyr array (rank profile) of an arbitrary
matrix, see :func:`aff`.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .arith import (
    DEFAULT_TOL,
    EXACT,
    NUMERIC,
    ONE,
    ZERO,
    RootMultiset,
    close,
    exact,
    format_scalar,
    is_zero,
    parse_scalar,
    roots_of_poly,
    sort_key,
    to_mode,
)
from .errors import ArgumentError, InternalInvariantError, ParseError, SpectrumError
from .linalg import Matrix, charpoly, direct_sum, krylov_rank, nullity_chain
from .partition import EigenAssignment, partition_of_weyr, stack_decomposition
from .plane import PlaneMatrix, inverse_image, plane_matrix_from_roots
from .rootfind import cluster


# -- data types ------------------------------------------------------------------

@dataclass(frozen=True)
class JordanForm:
    """Multiset of Jordan blocks stored as sorted ``(eigenvalue, size, count)`` triples."""

    blocks: tuple

    def __post_init__(self):
        merged: dict = {}
        for lam, size, count in self.blocks:
            if size <= 0 or count <= 0:
                raise ArgumentError("block sizes and counts must be positive")
            merged[(lam, size)] = merged.get((lam, size), 0) + count
        ordered = sorted(((lam, size, c) for (lam, size), c in merged.items()),
                         key=lambda b: (sort_key(b[0]), b[1]))
        object.__setattr__(self, "blocks", tuple(ordered))

    @classmethod
    def from_blocks(cls, blocks: Iterable) -> "JordanForm":
        """Accepts ``(eigenvalue, size)`` pairs or ``(eigenvalue, size, count)`` triples."""
        triples = []
        for b in blocks:
            triples.append((b[0], b[1], b[2] if len(b) > 2 else 1))
        return cls(tuple(triples))

    @property
    def n(self) -> int:
        return sum(size * c for _, size, c in self.blocks)

    def eigenvalues(self) -> list:
        return sorted({lam for lam, _, _ in self.blocks}, key=sort_key)

    def spectrum(self) -> RootMultiset:
        """Eigenvalues with algebraic multiplicities."""
        alg: dict = defaultdict(int)
        for lam, size, c in self.blocks:
            alg[lam] += size * c
        return RootMultiset(tuple(alg.items()))

    def shape(self) -> tuple:
        """The similarity type with eigenvalue labels forgotten.

        A sorted tuple holding, per distinct eigenvalue, its nonincreasing
        tuple of block sizes.
        """
        sizes: dict = defaultdict(list)
        for lam, size, c in self.blocks:
            sizes[lam].extend([size] * c)
        return tuple(sorted(tuple(sorted(v, reverse=True)) for v in sizes.values()))

    def materialize(self, mode: str = EXACT) -> Matrix:
        """Block diagonal matrix, blocks ordered by (eigenvalue, size), ones on the subdiagonal."""
        entries, off = {}, 0
        for lam, size, c in self.blocks:
            for _ in range(c):
                for k in range(size):
                    entries[(off + k, off + k)] = lam
                    if k:
                        entries[(off + k, off + k - 1)] = 1
                off += size
        return Matrix.from_entries(self.n, entries, mode)

    def same_as(self, other: "JordanForm", tol: float = DEFAULT_TOL) -> bool:
        """Equality with eigenvalues compared by :func:`close`."""
        if len(self.blocks) != len(other.blocks):
            return False
        unused = list(other.blocks)
        for lam, size, c in self.blocks:
            hit = next((b for b in unused if b[1] == size and b[2] == c and close(lam, b[0], tol)), None)
            if hit is None:
                return False
            unused.remove(hit)
        return True

    def __str__(self):
        return format_jordan(self)


@dataclass(frozen=True)
class WeyrArray:
    """Per-eigenvalue Weyr characteristic: entry i counts blocks of size >= i+1."""

    per_eigen: tuple

    def __post_init__(self):
        items = []
        for lam, seq in self.per_eigen:
            seq = tuple(int(w) for w in seq if w)
            if any(a < b for a, b in zip(seq, seq[1:])):
                raise ArgumentError(f"Weyr sequence {seq} is not nonincreasing")
            if seq:
                items.append((lam, seq))
        object.__setattr__(self, "per_eigen", tuple(sorted(items, key=lambda kv: sort_key(kv[0]))))

    @classmethod
    def from_dict(cls, mapping: Mapping) -> "WeyrArray":
        return cls(tuple(mapping.items()))

    def items(self):
        return self.per_eigen

    def as_dict(self) -> dict:
        return dict(self.per_eigen)

    def __getitem__(self, lam):
        for key, seq in self.per_eigen:
            if key == lam:
                return seq
        raise KeyError(lam)

    @property
    def n(self) -> int:
        return sum(sum(seq) for _, seq in self.per_eigen)

    def same_as(self, other: "WeyrArray", tol: float = DEFAULT_TOL) -> bool:
        if len(self.per_eigen) != len(other.per_eigen):
            return False
        unused = list(other.per_eigen)
        for lam, seq in self.per_eigen:
            hit = next((kv for kv in unused if kv[1] == seq and close(lam, kv[0], tol)), None)
            if hit is None:
                return False
            unused.remove(hit)
        return True

    def __str__(self):
        return format_weyr(self)


@dataclass(frozen=True)
class MultiplicityTable:
    """``mu[(lam, j)]``: multiplicity of ``lam`` as a root of stack j (0-based)."""

    eigenvalues: tuple
    mu: Mapping
    m: tuple

    @property
    def t(self) -> int:
        return len(self.m)

    def multiplicity(self, lam, j: int) -> int:
        return self.mu.get((lam, j), 0)

    def alpha(self, lam, j: int) -> int:
        """Running total of ``mu(lam, i)`` over stacks ``i <= j``."""
        return sum(self.mu.get((lam, i), 0) for i in range(j + 1))


# -- text forms ---------------------------------------------------------------------

def format_jordan(j: JordanForm) -> str:
    """``"1*J1(1)+3*J1(2)+2*J2(1)"``, terms ordered by size then eigenvalue."""
    terms = sorted(j.blocks, key=lambda b: (b[1], sort_key(b[0])))
    return "+".join(f"{c}*J{size}({format_scalar(lam)})" for lam, size, c in terms)


_TERM = re.compile(r"(?:(\d+)\*?)?J(\d+)\((.+)\)")


def _split_top_level(text: str, sep: str = "+") -> list:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_jordan(text: str, mode: str = EXACT) -> JordanForm:
    """Inverse of :func:`format_jordan`; also accepts ``"J1(1)+3J1(2)"``."""
    blocks = []
    for term in _split_top_level(text.replace(" ", "").replace("⊕", "+")):
        if not term:
            continue
        m = _TERM.fullmatch(term)
        if not m:
            raise ParseError(f"cannot parse Jordan term {term!r}")
        count = int(m.group(1)) if m.group(1) else 1
        blocks.append((parse_scalar(m.group(3), mode), int(m.group(2)), count))
    if not blocks:
        raise ParseError("empty Jordan form")
    return JordanForm(tuple(blocks))


def format_weyr(w: WeyrArray) -> str:
    return "\n".join(f"{format_scalar(lam)}:({','.join(map(str, seq))})" for lam, seq in w.per_eigen)


def parse_weyr(text: str, mode: str = EXACT) -> WeyrArray:
    items = []
    for line in text.strip().splitlines():
        line = line.strip().replace(" ", "")
        if not line:
            continue
        lam, _, seq = line.rpartition(":")
        if not lam or not (seq.startswith("(") and seq.endswith(")")):
            raise ParseError(f"cannot parse Weyr line {line!r}")
        try:
            values = tuple(int(x) for x in seq[1:-1].split(",") if x)
        except ValueError:
            raise ParseError(f"cannot parse Weyr line {line!r}") from None
        items.append((parse_scalar(lam, mode), values))
    return WeyrArray(tuple(items))


# -- Jordan <-> Weyr ---------------------------------------------------------------

def weyr_of_jordan(j: JordanForm) -> WeyrArray:
    sizes: dict = defaultdict(list)
    for lam, size, c in j.blocks:
        sizes[lam].extend([size] * c)
    items = []
    for lam, ss in sizes.items():
        items.append((lam, tuple(sum(1 for s in ss if s >= i) for i in range(1, max(ss) + 1))))
    return WeyrArray(tuple(items))


def jordan_of_weyr(w: WeyrArray) -> JordanForm:
    blocks = []
    for lam, seq in w.per_eigen:
        padded = list(seq) + [0]
        for i in range(len(seq)):
            count = padded[i] - padded[i + 1]
            if count:
                blocks.append((lam, i + 1, count))
    return JordanForm(tuple(blocks))


# -- plane matrix -> Jordan data -----------------------------------------------------

def _unified_assignment(assignment: EigenAssignment, mode: str, tol: float) -> list:
    """Per-stack ``{eigenvalue: multiplicity}`` with numeric roots merged across stacks."""
    if mode == EXACT:
        return [dict(roots.entries) for roots in assignment.per_stack]
    reps = [v for roots in assignment.per_stack for v, _ in roots.entries]
    groups = cluster([complex(v) for v in reps], tol) if reps else []
    canon = {}
    for g in groups:
        mean = complex(sum(g) / len(g))
        for v in g:
            canon[complex(v)] = mean
    out = []
    for roots in assignment.per_stack:
        d: dict = defaultdict(int)
        for v, k in roots.entries:
            d[canon[complex(v)]] += k
        out.append(dict(d))
    return out


def multiplicity_table(a: PlaneMatrix, mode: str | None = None, tol: float = DEFAULT_TOL) -> MultiplicityTable:
    mode = mode or a.mode
    per_stack = _unified_assignment(inverse_image(a, mode, tol), mode, tol)
    mu = {}
    for j, d in enumerate(per_stack):
        for lam, k in d.items():
            mu[(lam, j)] = k
    eigen = tuple(sorted({lam for lam, _ in mu}, key=sort_key))
    return MultiplicityTable(eigen, mu, stack_decomposition(a.partition).m)


def companion(coeffs: Sequence, mode: str = EXACT) -> Matrix:
    """``C(a_0, ..., a_{l-1})``: subdiagonal ones, coefficients in the last column."""
    l = len(coeffs)
    entries = {(k, k - 1): 1 for k in range(1, l)}
    for k, a in enumerate(coeffs):
        entries[(k, l - 1)] = a
    return Matrix.from_entries(l, entries, mode)


def g_matrix(a: PlaneMatrix, j: int) -> Matrix:
    """Chained companion matrix of stacks ``0..j`` (0-based j), size ``s_j``.

    Direct sum of the stack companions plus a one at each junction
    ``(s_i, s_i - 1)`` linking consecutive blocks.
    """
    stacks = stack_decomposition(a.partition)
    if not 0 <= j < stacks.t:
        raise ArgumentError(f"stack index {j} outside 0..{stacks.t - 1}")
    g = direct_sum(*(companion(a.coeffs[i], a.mode) for i in range(j + 1)))
    if j == 0:
        return g
    rows = [list(r) for r in g.rows]
    one = ONE if a.mode == EXACT else 1 + 0j
    for i in range(j):
        s_i = stacks.s[i]
        rows[s_i][s_i - 1] = one
    return Matrix(rows, a.mode)


def _weak_components(m: Matrix, tol: float) -> list:
    n = m.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(n):
            if i != j and not is_zero(m[i, j], tol):
                parent[find(i)] = find(j)
    comps: dict = defaultdict(list)
    for i in range(n):
        comps[find(i)].append(i)
    return sorted((sorted(c) for c in comps.values()), key=lambda c: c[0])


def invariant_subspaces(a: PlaneMatrix, tol: float = DEFAULT_TOL) -> list:
    """Basis-index sets (0-based) of the cyclic subspaces generated by ``e_0 .. e_{m_1-1}``.

    They are read off as weakly connected components of the digraph of ``a``.
    Checks that the components tile the basis, that component i has size
    ``s_j`` for i in the j-th index set, that it is the cyclic subspace of
    ``e_i``, and that ``a`` restricted to it is ``g_matrix(a, j)``.
    """
    stacks = stack_decomposition(a.partition)
    comps = _weak_components(a.matrix, tol)
    m1 = stacks.m[0]
    if len(comps) != m1 or [c[0] for c in comps] != list(range(m1)):
        raise InternalInvariantError(f"expected {m1} components rooted at e_0..e_{m1 - 1}, got {comps}")
    zero, one = (ZERO, ONE) if a.mode == EXACT else (0j, 1 + 0j)
    for j, index_set in enumerate(stacks.index_sets):
        g = g_matrix(a, j)
        for i in index_set:
            comp = comps[i - 1]
            if len(comp) != stacks.s[j]:
                raise InternalInvariantError(f"component of e_{i - 1} has size {len(comp)}, "
                                             f"expected {stacks.s[j]}")
            restricted = a.matrix.submatrix(comp)
            if not restricted.allclose(g, tol):
                raise InternalInvariantError(f"restriction to component {comp} is not G_{j + 1}")
            e = [one if k == i - 1 else zero for k in range(a.n)]
            if krylov_rank(a.matrix, e, tol) != len(comp):
                raise InternalInvariantError(f"e_{i - 1} does not generate its component")
    return [tuple(c) for c in comps]


def permutation_decompose(a: PlaneMatrix, tol: float = DEFAULT_TOL) -> tuple:
    """Permutation (list of 0-based indices) and the permuted matrix.

    The permuted matrix is the block diagonal sum over stacks j of
    ``(m_j - m_{j+1})`` copies of ``g_matrix(a, j)``.
    """
    comps = invariant_subspaces(a, tol)
    perm = [i for c in comps for i in c]
    permuted = a.matrix.permuted(perm)
    stacks = stack_decomposition(a.partition)
    blocks = []
    for j in range(stacks.t):
        blocks.extend([g_matrix(a, j)] * (stacks.m[j] - stacks.m_next(j)))
    if not permuted.allclose(direct_sum(*blocks), tol):
        raise InternalInvariantError("permuted matrix is not the expected direct sum")
    return perm, permuted


def jordan_of_plane(a: PlaneMatrix, mode: str | None = None, tol: float = DEFAULT_TOL) -> JordanForm:
    """Jordan form from the stack roots: ``(m_j - m_{j+1})`` copies of ``J_{alpha(lam, j)}(lam)``."""
    table = multiplicity_table(a, mode, tol)
    blocks = []
    for j in range(table.t):
        copies = table.m[j] - (table.m[j + 1] if j + 1 < table.t else 0)
        for lam in table.eigenvalues:
            size = table.alpha(lam, j)
            if size:
                blocks.append((lam, size, copies))
    return JordanForm(tuple(blocks))


def weyr_of_plane(a: PlaneMatrix, mode: str | None = None, tol: float = DEFAULT_TOL) -> WeyrArray:
    """Weyr array straight from the multiplicities: ``m_j`` repeated ``mu(lam, j)`` times."""
    table = multiplicity_table(a, mode, tol)
    items = []
    for lam in table.eigenvalues:
        seq = []
        for j in range(table.t):
            seq.extend([table.m[j]] * table.multiplicity(lam, j))
        items.append((lam, tuple(seq)))
    return WeyrArray(tuple(items))


# -- arbitrary matrices ---------------------------------------------------------------

def _spectrum(b: Matrix, eigenvalues, mode: str, tol: float) -> RootMultiset:
    if eigenvalues is None:
        if mode == EXACT:
            return roots_of_poly(charpoly(b), mode, tol)
        values = [complex(v) for v in np.linalg.eigvals(b.to_numpy())]
        return RootMultiset(tuple((complex(sum(g) / len(g)), len(g)) for g in cluster(values, tol)))
    if isinstance(eigenvalues, JordanForm):
        eigenvalues = eigenvalues.spectrum()
    if isinstance(eigenvalues, RootMultiset):
        return RootMultiset(tuple((to_mode(v, mode), k) for v, k in eigenvalues.entries))
    if isinstance(eigenvalues, Mapping):
        return RootMultiset(tuple((to_mode(v, mode), k) for v, k in eigenvalues.items()))
    values = [to_mode(v, mode) for v in eigenvalues]
    if mode == EXACT:
        return RootMultiset.from_values(values)
    return RootMultiset(tuple((complex(sum(g) / len(g)), len(g)) for g in cluster(values, tol)))


def weyr_of_general(b: Matrix, eigenvalues=None, mode: str | None = None,
                    tol: float = DEFAULT_TOL) -> WeyrArray:
    """Weyr array of any square matrix from nullities of powers of ``b - lam I``.

    ``eigenvalues`` may be a :class:`RootMultiset`, a ``{value: multiplicity}``
    mapping, a flat list with repeats, or None to find them from the
    characteristic polynomial.
    """
    mode = mode or b.mode
    b = b.to_mode(mode)
    spectrum = _spectrum(b, eigenvalues, mode, tol)
    if spectrum.degree != b.n:
        raise SpectrumError(f"eigenvalue multiplicities sum to {spectrum.degree}, expected {b.n}")
    items = []
    for lam, k in spectrum.entries:
        chain = nullity_chain(b.shift(lam), k, tol)
        if chain[-1] != k:
            raise SpectrumError(f"{format_scalar(lam)} has generalized eigenspace of dimension "
                                f"{chain[-1]}, expected {k}")
        items.append((lam, tuple(x - y for x, y in zip(chain, [0] + chain[:-1]))))
    return WeyrArray(tuple(items))


def aff(b: Matrix, eigenvalues=None, mode: str | None = None, tol: float = DEFAULT_TOL) -> PlaneMatrix:
    """The canonical plane matrix similar to ``b``."""
    mode = mode or b.mode
    pi, assignment = partition_of_weyr(weyr_of_general(b, eigenvalues, mode, tol))
    return plane_matrix_from_roots(pi, assignment)


def aff_of_jordan(j: JordanForm) -> PlaneMatrix:
    """Canonical plane matrix of a Jordan form, without materializing it."""
    pi, assignment = partition_of_weyr(weyr_of_jordan(j))
    return plane_matrix_from_roots(pi, assignment)


def similar(b: Matrix, other: Matrix, mode: str | None = None, tol: float = DEFAULT_TOL,
            eigenvalues=None) -> bool:
    """True iff the two matrices have the same Weyr array."""
    if b.n != other.n:
        return False
    mode = mode or b.mode
    wb = weyr_of_general(b, eigenvalues, mode, tol)
    try:
        wo = weyr_of_general(other, eigenvalues, mode, tol)
    except SpectrumError:
        if eigenvalues is None:
            raise
        return False
    return wb.same_as(wo, tol)


__all__ = [
    "JordanForm",
    "MultiplicityTable",
    "WeyrArray",
    "aff",
    "aff_of_jordan",
    "companion",
    "format_jordan",
    "format_weyr",
    "g_matrix",
    "invariant_subspaces",
    "jordan_of_plane",
    "jordan_of_weyr",
    "multiplicity_table",
    "parse_jordan",
    "parse_weyr",
    "permutation_decompose",
    "similar",
    "weyr_of_general",
    "weyr_of_jordan",
    "weyr_of_plane",
]
