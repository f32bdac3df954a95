"""The affine planes of canonical plane matrices.

Every matrix of the plane for a partition ``pi`` is ``S + L`` where the shift
``S`` is the constant 0/1 part of ``build_p(pi)`` and ``L`` ranges over the
span of one 0/1 pattern per stack coefficient ``a_{j,i}`` (the last column
of the stack's companion block, replicated over ``E_{m_j}``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .arith import (
    DEFAULT_TOL,
    EXACT,
    NUMERIC,
    ONE,
    MonicPoly,
    close,
    exact,
    is_exact,
    is_zero,
    poly_from_roots,
    roots_of_poly,
)
from .errors import ArgumentError, InternalInvariantError
from .linalg import Matrix
from .partition import (
    EigenAssignment,
    Partition,
    StackDecomposition,
    enumerate_partitions,
    stack_decomposition,
)
from .symbolic import build_p


@dataclass(frozen=True)
class PlaneDescriptor:
    partition: Partition
    stacks: StackDecomposition
    shift_support: frozenset
    slots: tuple  # ((stack j, coeff i, (positions...)), ...) stack-major, 0-based
    shift: Matrix = field(repr=False)
    basis: tuple = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.partition.n

    def free_support(self) -> frozenset:
        return frozenset(p for _, _, pos in self.slots for p in pos)


@lru_cache(maxsize=None)
def plane_descriptor(pi: Partition) -> PlaneDescriptor:
    p = build_p(pi)
    stacks = stack_decomposition(pi)
    offs = pi.offsets()
    slots = []
    for j in range(stacks.t):
        m, l = stacks.m[j], stacks.l[j]
        base = offs[stacks.first_part[j]]
        last_col = base + (l - 1) * m
        for i in range(l):
            slots.append((j, i, tuple((base + i * m + r, last_col + r) for r in range(m))))
    shift_support = p.ones()
    free = {q for _, _, pos in slots for q in pos}
    if free != set(p.variable_positions()) or free & shift_support:
        raise InternalInvariantError("slot layout disagrees with the symbolic matrix")
    shift = Matrix.from_entries(pi.n, {q: 1 for q in shift_support})
    basis = tuple(Matrix.from_entries(pi.n, {q: 1 for q in pos}) for _, _, pos in slots)
    return PlaneDescriptor(pi, stacks, shift_support, tuple(slots), shift, basis)


@dataclass(frozen=True)
class PlaneMatrix:
    """A concrete matrix of the plane for ``partition``.

    ``coeffs[j]`` is the stack-j vector ``(a_{j0}, ..., a_{j,l_j-1})`` of its
    stack equation ``X**l_j - sum(a_{ji} X**i)``.
    """

    partition: Partition
    coeffs: tuple
    matrix: Matrix = field(compare=False)

    @property
    def mode(self) -> str:
        return self.matrix.mode

    @property
    def n(self) -> int:
        return self.matrix.n

    def stack_polys(self) -> list:
        return [MonicPoly(c) for c in self.coeffs]

    def __eq__(self, other):
        return (isinstance(other, PlaneMatrix) and self.partition == other.partition
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.partition, self.matrix))


def plane_matrix(pi: Partition, coeffs: Sequence[Sequence], mode: str = EXACT) -> PlaneMatrix:
    """Materialize ``S + sum(a_{ji} V_{ji})``."""
    desc = plane_descriptor(pi)
    conv = exact if mode == EXACT else complex
    coeffs = tuple(tuple(conv(a) for a in c) for c in coeffs)
    if tuple(len(c) for c in coeffs) != desc.stacks.l:
        raise ArgumentError(f"coefficient vector lengths must be {desc.stacks.l}")
    entries = {q: 1 for q in desc.shift_support}
    for j, i, pos in desc.slots:
        for q in pos:
            entries[q] = coeffs[j][i]
    return PlaneMatrix(pi, coeffs, Matrix.from_entries(pi.n, entries, mode))


def plane_matrix_from_roots(pi: Partition, assignment: EigenAssignment | Sequence) -> PlaneMatrix:
    """The plane matrix whose stack equations have the given root multisets."""
    per_stack = assignment.per_stack if isinstance(assignment, EigenAssignment) else assignment
    coeffs = [poly_from_roots(r).low for r in per_stack]
    mode = EXACT if all(is_exact(a) for c in coeffs for a in c) else NUMERIC
    return plane_matrix(pi, coeffs, mode)


def _match(desc: PlaneDescriptor, m: Matrix, tol: float):
    rows = m.rows
    shift = desc.shift_support
    one = ONE if m.mode == EXACT else 1.0
    for i, j in shift:
        if not close(rows[i][j], one, tol):
            return None
    free = desc.free_support()
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if (i, j) not in shift and (i, j) not in free and not is_zero(x, tol):
                return None
    coeffs = [[None] * l for l in desc.stacks.l]
    for j, i, pos in desc.slots:
        vals = [rows[a][b] for a, b in pos]
        if any(not close(v, vals[0], tol) for v in vals[1:]):
            return None
        coeffs[j][i] = vals[0] if m.mode == EXACT else sum(vals) / len(vals)
    return tuple(tuple(c) for c in coeffs)


def memberships(m: Matrix, tol: float = DEFAULT_TOL) -> list:
    """Every partition whose plane contains ``m`` (never more than one)."""
    found = []
    for pi in enumerate_partitions(m.n):
        coeffs = _match(plane_descriptor(pi), m, tol)
        if coeffs is not None:
            found.append(PlaneMatrix(pi, coeffs, m))
    return found


def recognize(m: Matrix, tol: float = DEFAULT_TOL) -> PlaneMatrix | None:
    """The unique plane matrix equal to ``m``, or None if ``m`` lies in no plane."""
    for pi in enumerate_partitions(m.n):
        coeffs = _match(plane_descriptor(pi), m, tol)
        if coeffs is not None:
            return PlaneMatrix(pi, coeffs, m)
    return None


def inverse_image(a: PlaneMatrix, mode: str | None = None, tol: float = DEFAULT_TOL) -> EigenAssignment:
    """Per-stack root multisets of the stack equations; substituting them into P gives ``a``."""
    mode = mode or a.mode
    return EigenAssignment(tuple(roots_of_poly(p, mode, tol) for p in a.stack_polys()))


def disjoint_witness(pi: Partition, other: Partition) -> tuple:
    """A 0-based position forced to 1 in one plane and forced to 0 in the other.

    Scans rows bottom-up, columns left to right. Such a position exists for
    any two distinct partitions of the same n, which proves the planes are
    disjoint.
    """
    if pi == other:
        raise ArgumentError("partitions must differ")
    if pi.n != other.n:
        raise ArgumentError("partitions must be of the same n")
    a, b = plane_descriptor(pi), plane_descriptor(other)
    differing = a.shift_support ^ b.shift_support
    free = a.free_support() | b.free_support()
    forced = sorted(differing - free, key=lambda q: (-q[0], q[1]))
    if not forced:
        raise InternalInvariantError(f"no forced witness separating {pi} and {other}")
    return forced[0]


__all__ = [
    "PlaneDescriptor",
    "PlaneMatrix",
    "disjoint_witness",
    "inverse_image",
    "memberships",
    "plane_descriptor",
    "plane_matrix",
    "plane_matrix_from_roots",
    "recognize",
]
