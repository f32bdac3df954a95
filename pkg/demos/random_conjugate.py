"""Recover the canonical plane matrix of a disguised Jordan matrix.

A random Jordan form is conjugated by a random unimodular Gaussian-integer
matrix. The canonical form is then recovered from the conjugate and compared
with the one built directly from the Jordan data.
"""

import random

from planeform import Matrix, aff, aff_of_jordan, format_jordan, jordan_of_plane, parse_jordan
from planeform.arith import exact
from planeform.linalg import inverse

rng = random.Random(7)
jf = parse_jordan("2*J1(3)+1*J2(3)+1*J3(-1)+1*J1(i)")
n = jf.n

small = [exact(k) for k in (-2, -1, 0, 1, 2)]
lower = Matrix([[exact(1) if i == j else rng.choice(small) if j < i else exact(0)
                 for j in range(n)] for i in range(n)])
upper = Matrix([[exact(1) if i == j else rng.choice(small) if j > i else exact(0)
                 for j in range(n)] for i in range(n)])
q = lower @ upper
disguised = q @ jf.materialize() @ inverse(q)

print("Jordan form:", format_jordan(jf))
print("conjugated matrix:")
print(disguised)

canon = aff(disguised)
print("\ncanonical plane matrix (partition", canon.partition, "):")
print(canon.matrix)
assert canon == aff_of_jordan(jf)
print("\nJordan form read back:", format_jordan(jordan_of_plane(canon)))
