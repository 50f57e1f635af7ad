"""Depth bounds from the total homology rank.

A taut balanced sutured manifold of total rank r has depth at most
2*floor(log2 r); with a vertical decomposition step available the knot
variant adds one.  Rank 1 means depth 0, a product.
"""

from sfhpoly import build_tpqn, depth_upper_bound, homology, knot_depth_bound

for rank in (1, 2, 3, 4, 7, 8, 16):
    print(f"rank {rank}: depth <= {depth_upper_bound(rank)},"
          f" knot variant <= {knot_depth_bound(rank)}")

for p, q, n in ((1, 0, 2), (1, 0, 4), (1, 0, 8)):
    table = homology(build_tpqn(p, q, n))
    rank = table.total_dim
    print(f"T({p},{q};{n}): total rank {rank},"
          f" depth bound {depth_upper_bound(rank)}")
