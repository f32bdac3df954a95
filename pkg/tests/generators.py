"""Random inputs shared by the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from planeform.arith import I, exact
from planeform.jordan import JordanForm
from planeform.linalg import Matrix, inverse
from planeform.partition import Partition

POOL = (exact(0), exact(1), exact(2), exact(-1), I)

# The 8x8 matrix for (3,3,2) at (1,2,1), as printed in the worked example.
RUNNING = [
    [0, 0, 0, -2, 0, 0, 0, 0],
    [0, 0, 0, 0, -2, 0, 0, 0],
    [0, 0, 0, 0, 0, -2, 0, 0],
    [1, 0, 0, 3, 0, 0, 0, 0],
    [0, 1, 0, 0, 3, 0, 0, 0],
    [0, 0, 1, 0, 0, 3, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 1],
]


def random_partition(rng: random.Random, n: int) -> Partition:
    parts, left = [], n
    while left:
        p = rng.randint(1, min(left, parts[-1] if parts else left))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


def random_jordan(rng: random.Random, n: int, pool=POOL) -> JordanForm:
    """Random Jordan form of size n: random block sizes, eigenvalues from ``pool``."""
    sizes = random_partition(rng, n).parts
    return JordanForm.from_blocks((rng.choice(pool), s) for s in sizes)


def random_unimodular(rng: random.Random, n: int) -> tuple:
    """Exact invertible Q (unit lower times unit upper, entries in Z[i]) and its inverse."""
    small = [exact(k) for k in (-2, -1, 0, 0, 1, 2)] + [I, -I]
    lower = Matrix.from_entries(n, {**{(i, i): 1 for i in range(n)},
                                    **{(i, j): rng.choice(small) for i in range(n) for j in range(i)}})
    upper = Matrix.from_entries(n, {**{(i, i): 1 for i in range(n)},
                                    **{(i, j): rng.choice(small) for i in range(n) for j in range(i + 1, n)}})
    q = lower @ upper
    return q, inverse(q)


# -- hypothesis strategies ------------------------------------------------------------

small_ints = st.integers(min_value=-6, max_value=6)
small_rationals = st.builds(lambda p, q: exact(p) / exact(q), small_ints, st.integers(1, 4))
gaussian_rationals = st.builds(lambda a, b: a + b * I, small_rationals, small_rationals)
pool_values = st.sampled_from(POOL)


@st.composite
def partitions(draw, max_n: int = 7, min_n: int = 1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    parts, left = [], n
    while left:
        p = draw(st.integers(min_value=1, max_value=min(left, parts[-1] if parts else left)))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


@st.composite
def jordan_forms(draw, max_n: int = 6, values=pool_values):
    pi = draw(partitions(max_n=max_n))
    return JordanForm.from_blocks((draw(values), s) for s in pi.parts)
