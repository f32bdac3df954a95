"""Count the similarity shape classes of 5x5 matrices reachable by plane matrices.

For each partition of 5, every assignment of eigenvalues drawn from a small
pool is pushed through the plane construction, and the resulting Jordan
shapes (block sizes per eigenvalue with the values themselves forgotten) are
collected.
"""

import sys
from collections import defaultdict

from planeform import Partition, enumerate_partitions, jordan_of_plane, plane_matrix_from_roots
from planeform.arith import I
from planeform.verify import pool_assignments

n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
pool = (0, 1, 2, -1, I)

by_partition = defaultdict(set)
for pi in enumerate_partitions(n):
    for assignment in pool_assignments(pi, pool):
        by_partition[pi].add(jordan_of_plane(plane_matrix_from_roots(pi, assignment)).shape())

everything = set().union(*by_partition.values())
for pi, shapes in by_partition.items():
    print(f"{str(pi):>12}: {len(shapes):3d} shape classes")
print(f"{'all':>12}: {len(everything):3d} shape classes")
print("with at most 3 distinct eigenvalues:", sum(1 for s in everything if len(s) <= 3))
