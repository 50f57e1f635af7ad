"""Support polytope, faces, and semi-norms for T(1, 0; 8).

The support points are twice the class positions relative to the first
nonzero class.  The polytope is their convex hull centered at its
centroid; faces come from minimizing a linear functional over the
support, and the semi-norm y is the support function of the reflected
centered polytope.
"""

from fractions import Fraction

from sfhpoly import (build_polytope, build_tpqn, face_query, homology,
                     seminorm_y, support_points, symmetrized_z)

table = homology(build_tpqn(1, 0, 8))
supp = support_points(table)
print("support points (point, dimension):", supp.points)

poly = build_polytope(supp)
print("dim", poly.dim, "of ambient", poly.b1,
      "full-dimensional:", poly.full_dimensional)
print("centered vertices:", poly.centered.vertices)
print("facets (normal, offset):", poly.centered.facets)

for alpha in ((Fraction(1),), (Fraction(-1),), (Fraction(3, 2),)):
    res = face_query(poly, supp, alpha)
    label = "(" + ",".join(str(x) for x in alpha) + ")"
    print(f"face for {label}: minimum {res.c_min},"
          f" points {res.face_points}, dimension {res.face_dimension}")
    print(f"  y{label} = {seminorm_y(poly, alpha)},"
          f" z{label} = {symmetrized_z(poly, alpha)}")
