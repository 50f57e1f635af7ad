"""Class dimensions for the torus-suture family T(p, q; n).

T(p, q; n) is a solid torus whose boundary carries n parallel sutures
of slope (p, q).  Its diagram is a base surface glued with (n-2)/2
elementary pieces in a chain.  The homology splits into p(k+1) classes
along the free part of H1, with dimensions C(k, floor(i/p)), k=(n-2)/2.
"""

from math import comb

from sfhpoly import build_tpqn, homology

for p, q, n in ((1, 0, 2), (1, 0, 6), (1, 0, 8), (2, 1, 4), (3, 2, 4),
                (5, 2, 2)):
    table = homology(build_tpqn(p, q, n))
    rows = sorted(table.classes, key=lambda c: c.free_coords[0])
    dims = [c.dimension for c in rows]
    k = (n - 2) // 2
    expected = [comb(k, i // p) for i in range(p * (k + 1))]
    print(f"T({p},{q};{n}): b1={table.b1} torsion={table.torsion}")
    for c in rows:
        print(f"  class at {c.free_coords}: {c.gen_count} generators,"
              f" dimension {c.dimension}, gradings {c.gradings}")
    print("  dims", dims, "binomial pattern", expected,
          "match:", min(dims, dims[::-1]) == expected)
