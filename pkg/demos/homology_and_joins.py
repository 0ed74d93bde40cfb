"""
Exact homology and the join connectivity bound
==============================================
"""

from spheredeg import build_complex, join, reduced_homology
from spheredeg.simplicial import boundary_of_simplex, homological_connectivity

RP2 = [[1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
       [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6]]
print("RP^2:", reduced_homology(build_complex(RP2)).groups)

# Joining two circles gives a 3-sphere: 0-connected plus 0-connected
# gives a (0 + 0 + 2*2 - 2) = 2-connected join.
a = boundary_of_simplex("abc")
b = boundary_of_simplex("xyz")
S3 = join(a, b)
print("f-vector of the join:", S3.f_vector())
print("homology:", reduced_homology(S3).groups)
print("connected through degree", homological_connectivity(S3))

s0 = build_complex([["p"], ["q"]])
square = join(s0, build_complex([["u"], ["v"]]))
print("S^0 * S^0 has", len(square.facets), "edges, connectivity", homological_connectivity(square))
