"""Walk through the 8x8 plane matrix for the partition 3,3,2.

Builds the symbolic template, substitutes roots, reads off the Jordan and
Weyr forms from the partition alone, and checks them against the generic
rank computation.
"""

from planeform import (
    Partition, build_p, format_jordan, format_weyr, inverse_image, jordan_of_plane,
    permutation_decompose, plane_matrix_from_roots, substitute, weyr_of_general,
    weyr_of_plane,
)

pi = Partition((3, 3, 2))
template = build_p(pi)
print(f"symbolic template for {pi} ({template.nvars} variables):")
print(template)

# stack 0 has roots 1, 2; stack 1 has root 1
a = plane_matrix_from_roots(pi, [[1, 2], [1]])
print("\nsubstituted plane matrix:")
print(a.matrix)
assert a.matrix == substitute(template, [1, 2, 1])

print("\nroots recovered per stack:", ", ".join(str(r) for r in inverse_image(a)))
print("Jordan form from the partition:", format_jordan(jordan_of_plane(a)))
print("Weyr form from the partition:  ", format_weyr(weyr_of_plane(a)).replace("\n", "; "))
print("Weyr form from ranks:          ", format_weyr(weyr_of_general(a.matrix)).replace("\n", "; "))

perm, permuted = permutation_decompose(a)
print("\nbasis order that splits the matrix into blocks:", [k + 1 for k in perm])
print(permuted)
