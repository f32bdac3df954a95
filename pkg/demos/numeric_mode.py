"""Numeric mode on a matrix whose eigenvalues are irrational.

Exact arithmetic stops at Q(i), so the square roots of 2 force the
floating-point path. Each eigenvalue here is a double root, and the root
finder only resolves double roots to about the square root of machine
precision, so the clustering tolerance is widened to match.
"""

from planeform import IrreducibleError, Matrix, aff, format_jordan, jordan_of_plane
from planeform.arith import exact

rows = [[0, 2, 0, 0],
        [1, 0, 0, 0],
        [1, 0, 0, 2],
        [0, 1, 1, 0]]
b = Matrix([[exact(x) for x in r] for r in rows])

try:
    aff(b)
except IrreducibleError as exc:
    print("exact mode refuses:", exc)

canon = aff(b, mode="numeric", tol=1e-6)
print("partition:", canon.partition)
print(canon.matrix)
print("Jordan form:", format_jordan(jordan_of_plane(canon, tol=1e-6)))
