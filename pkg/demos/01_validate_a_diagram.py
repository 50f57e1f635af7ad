"""Build a small diagram by hand and run the validity checks.

The surface is a four-holed sphere with one alpha and one beta curve
meeting in two points.  Every region is a punctured bigon; the walk
of each bigon alternates one alpha arc and one beta arc.
"""

from sfhpoly import (Curve, Diagram, Region, Segment, euler_measure,
                     is_admissible, is_nice, periodic_lattice, validate)

a = Curve("alpha", "a", ("u", "v"))
b = Curve("beta", "b", ("u", "v"))
regions = (
    Region("r1", 0, ((Segment("a", 0, True), Segment("b", 0, False)), "s0")),
    Region("r2", 0, ((Segment("b", 0, True), Segment("a", 1, True)), "s1")),
    Region("r3", 0, ((Segment("a", 1, False), Segment("b", 1, True)), "s2")),
    Region("r4", 0, ((Segment("a", 0, False), Segment("b", 1, False)),
                     "s3")),
)
d = Diagram((a,), (b,), ("s0", "s1", "s2", "s3"), regions)

report = validate(d)
print("valid:", report.ok)
for comp in report.components:
    print("component: euler", comp.euler, "boundary", comp.boundary_count,
          "genus", comp.genus)
for r in d.regions:
    print(f"euler measure of {r.name}:", euler_measure(r))
print("periodic lattice rank:", periodic_lattice(d).rank)
print("admissible:", is_admissible(d).admissible)
print("nice:", is_nice(d).nice)

# Reversing one arc makes region walks reuse it in the same direction.
broken = Diagram((a,), (b,), ("s0", "s1", "s2", "s3"), (
    regions[0],
    Region("r2", 0, ((Segment("b", 0, True), Segment("a", 1, False)),
                     "s1")),
) + regions[2:])
bad = validate(broken)
print("\nbroken variant valid:", bad.ok)
for v in bad.violations:
    print("violation:", v)
