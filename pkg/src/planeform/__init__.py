"""Canonical plane form of square matrices.

Each partition of n indexes an affine plane of n x n matrices; the planes are
pairwise disjoint and together contain exactly one matrix from every
similarity class. This package builds the planes, reads Jordan data off their
matrices, and maps any matrix to its canonical plane representative.
"""

from .arith import (
    DEFAULT_TOL,
    EXACT,
    NUMERIC,
    GaussianRational,
    MonicPoly,
    RootMultiset,
    exact,
    format_scalar,
    parse_scalar,
    poly_from_roots,
    roots_of_poly,
)
from .errors import (
    ArgumentError,
    ArityError,
    ClusterAmbiguityError,
    DegreeError,
    InternalInvariantError,
    IrreducibleError,
    MathError,
    ParseError,
    PartitionError,
    PlaneFormError,
    SpectrumError,
)
from .io import export_dot, read_matrix, to_dot, write_matrix
from .jordan import (
    JordanForm,
    WeyrArray,
    aff,
    aff_of_jordan,
    format_jordan,
    format_weyr,
    g_matrix,
    invariant_subspaces,
    jordan_of_plane,
    jordan_of_weyr,
    multiplicity_table,
    parse_jordan,
    parse_weyr,
    permutation_decompose,
    similar,
    weyr_of_general,
    weyr_of_jordan,
    weyr_of_plane,
)
from .linalg import Matrix, rank
from .partition import EigenAssignment, Partition, enumerate_partitions, partition_of_weyr, stack_decomposition
from .plane import (
    PlaneMatrix,
    disjoint_witness,
    inverse_image,
    memberships,
    plane_descriptor,
    plane_matrix,
    plane_matrix_from_roots,
    recognize,
)
from .symbolic import build_d, build_p, build_r, substitute
from .verify import VerifyReport, run_verify

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
