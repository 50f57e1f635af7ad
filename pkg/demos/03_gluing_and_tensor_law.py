"""Gluing two chains multiplies their class-dimension sequences.

Gluing a T(1, 0; n1) chain onto a T(p, q; m2) chain along one suture
circle of each yields T(p, q; n1 + m2 - 2).  Per class the dimensions
convolve, with the first factor's class index scaled by p.
"""

from sfhpoly import build_tpqn, glue, homology


def chain_end(p, q, n):
    k = (n - 2) // 2
    return f"e{k - 1}_s2" if k else "s1"


def dims_by_position(d):
    table = homology(d)
    rows = sorted(table.classes, key=lambda c: c.free_coords[0])
    dims = [c.dimension for c in rows]
    return min(dims, dims[::-1])


for n1, (p, q, m2) in ((4, (2, 1, 2)), (6, (2, 1, 2)), (4, (1, 0, 4))):
    a = build_tpqn(1, 0, n1)
    b = build_tpqn(p, q, m2)
    glued = glue(a, chain_end(1, 0, n1), b, chain_end(p, q, m2))
    da, db = dims_by_position(a), dims_by_position(b)
    conv = [0] * (p * (len(da) - 1) + len(db))
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            conv[p * i + j] += x * y
    got = dims_by_position(glued)
    print(f"T(1,0;{n1}) * T({p},{q};{m2}):")
    print("  factors", da, "and", db, f"(index scale {p})")
    print("  glued dims", got, "convolution", min(conv, conv[::-1]),
          "match:", got == min(conv, conv[::-1]))
    direct = dims_by_position(build_tpqn(p, q, n1 + m2 - 2))
    print(f"  equals T({p},{q};{n1 + m2 - 2}) directly:", got == direct)
