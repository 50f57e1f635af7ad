"""Combinatorial sutured Heegaard diagrams.

A diagram is a compact oriented surface-with-boundary carrying two systems
of closed curves, presented purely combinatorially: curves are cyclic lists
of intersection points, and the complementary regions are given by their
oriented boundary cycles.  A boundary cycle is a closed walk of directed
curve arcs (alternating between the two families at every corner) or a
whole boundary circle of the surface.

Corner quadrants are derived, not stored: at an intersection point each of
the four quadrants is named by a pair of signs (sign along the alpha curve,
sign along the beta curve), where + means the outgoing half-arc at the
point and - the incoming one.  A region's walk that arrives along a
directed segment ends at the incoming (-) half-arc if the segment is
traversed forwards, at the outgoing (+) half-arc if backwards; departures
mirror that.  A valid diagram has exactly one corner of each label at every
point, which pins down the local cross structure without any embedding
data.

Arc k of a curve runs from its k-th listed point to the next, cyclically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactalg import LinearSolver, integer_kernel_basis, smith_normal_form, \
    unimodular_inverse, vec_mat


class Disconnected(ValueError):
    """Operation needs a connected diagram."""


class UndecidedBeyondBound(RuntimeError):
    """Admissibility search refused: periodic lattice rank above the bound."""


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True)
class Segment:
    """A directed arc reference inside a region boundary cycle."""

    curve: str
    arc: int
    forward: bool

    def __str__(self) -> str:
        return f"{'+' if self.forward else '-'}{self.curve}.{self.arc}"


@dataclass(frozen=True)
class Curve:
    kind: str                      # "alpha" | "beta"
    name: str
    points: tuple[str, ...]        # cyclic order; orientation = list order

    def arc_ends(self, k: int) -> tuple[str, str]:
        """(start, end) of arc k."""
        return self.points[k], self.points[(k + 1) % len(self.points)]


# a boundary cycle is a closed walk of Segments, or a boundary-circle id
Cycle = tuple[Segment, ...] | str


@dataclass(frozen=True)
class Region:
    name: str
    genus: int
    boundary_cycles: tuple

    @property
    def arc_cycles(self) -> tuple[tuple[Segment, ...], ...]:
        return tuple(c for c in self.boundary_cycles if not isinstance(c, str))

    @property
    def circles(self) -> tuple[str, ...]:
        return tuple(c for c in self.boundary_cycles if isinstance(c, str))

    @property
    def touches_boundary(self) -> bool:
        return bool(self.circles)

    @property
    def corner_count(self) -> int:
        return sum(len(c) for c in self.arc_cycles)

    def compact_euler(self) -> int:
        """Euler characteristic of the closed-up region."""
        return 2 - 2 * self.genus - len(self.boundary_cycles)


@dataclass(frozen=True)
class Diagram:
    alpha_curves: tuple[Curve, ...]
    beta_curves: tuple[Curve, ...]
    boundary_circles: tuple[str, ...]
    regions: tuple[Region, ...]

    @property
    def curves(self) -> tuple[Curve, ...]:
        return self.alpha_curves + self.beta_curves


def segment_start(curve: Curve, seg: Segment) -> str:
    s, e = curve.arc_ends(seg.arc)
    return s if seg.forward else e


def segment_end(curve: Curve, seg: Segment) -> str:
    s, e = curve.arc_ends(seg.arc)
    return e if seg.forward else s


# ---------------------------------------------------------------------------
# one-pass scan: incidence tables plus violation list


class _Scan:
    """Derived incidence data; collects violations instead of crashing."""

    def __init__(self, d: Diagram):
        self.d = d
        self.violations: list[str] = []
        v = self.violations

        self.curve_by_name: dict[str, Curve] = {}
        for c in d.curves:
            if c.name in self.curve_by_name:
                v.append(f"duplicate curve id {c.name}")
            self.curve_by_name[c.name] = c
            if not c.points:
                v.append(f"curve {c.name} has no intersection points")
            seen = set()
            for p in c.points:
                if p in seen:
                    v.append(f"point {p} repeats on curve {c.name}")
                seen.add(p)
        if len(d.alpha_curves) != len(d.beta_curves):
            v.append(f"unbalanced: {len(d.alpha_curves)} alpha vs "
                     f"{len(d.beta_curves)} beta curves")

        if len(set(d.boundary_circles)) != len(d.boundary_circles):
            v.append("duplicate boundary circle id")
        names = [r.name for r in d.regions]
        if len(set(names)) != len(names):
            v.append("duplicate region id")

        # point incidence: exactly one alpha and one beta through each point
        self.point_alpha: dict[str, tuple[str, int]] = {}
        self.point_beta: dict[str, tuple[str, int]] = {}
        for c in d.curves:
            table = self.point_alpha if c.kind == "alpha" else self.point_beta
            for i, p in enumerate(c.points):
                if p in table and table[p][0] != c.name:
                    v.append(f"point {p} lies on two {c.kind} curves")
                table.setdefault(p, (c.name, i))
        self.points: list[str] = []
        for c in d.alpha_curves:
            for p in c.points:
                if p not in self.points:
                    self.points.append(p)
        for p in self.points:
            if p not in self.point_beta:
                v.append(f"point {p} lies on no beta curve")
        for c in d.beta_curves:
            for p in c.points:
                if p not in self.point_alpha:
                    v.append(f"point {p} lies on no alpha curve")
                    if p not in self.points:
                        self.points.append(p)

        self.region_pos = {r.name: i for i, r in enumerate(d.regions)}

        # arc usage and sides: every arc once per direction
        self.arc_side: dict[tuple[str, int], dict[bool, int]] = {}
        circle_uses: dict[str, list[str]] = {cid: [] for cid in d.boundary_circles}
        for ri, r in enumerate(d.regions):
            if r.genus < 0:
                v.append(f"region {r.name} has negative genus")
            if not r.boundary_cycles:
                v.append(f"region {r.name} has no boundary cycles")
            for cyc in r.boundary_cycles:
                if isinstance(cyc, str):
                    if cyc not in circle_uses:
                        v.append(f"region {r.name} uses undeclared circle {cyc}")
                    else:
                        circle_uses[cyc].append(r.name)
                    continue
                if not cyc:
                    v.append(f"region {r.name} has an empty boundary cycle")
                    continue
                for seg in cyc:
                    c = self.curve_by_name.get(seg.curve)
                    if c is None or not c.points or seg.arc >= len(c.points):
                        v.append(f"region {r.name} references unknown arc "
                                 f"{seg.curve}.{seg.arc}")
                        continue
                    sides = self.arc_side.setdefault((seg.curve, seg.arc), {})
                    if seg.forward in sides:
                        v.append(f"arc {seg.curve}.{seg.arc} used twice in "
                                 f"the same direction")
                    else:
                        sides[seg.forward] = ri
        for c in d.curves:
            for k in range(len(c.points)):
                sides = self.arc_side.get((c.name, k), {})
                for fwd in (True, False):
                    if fwd not in sides:
                        v.append(f"arc {c.name}.{k} missing "
                                 f"{'forward' if fwd else 'backward'} use")
        for cid, users in circle_uses.items():
            if len(users) != 1:
                v.append(f"boundary circle {cid} used in {len(users)} region "
                         f"cycles (need exactly 1)")

        # corner quadrants from walk continuity
        self.quadrant: dict[str, dict[tuple[int, int], int]] = {}
        for ri, r in enumerate(d.regions):
            for cyc in r.arc_cycles:
                usable = all(
                    seg.curve in self.curve_by_name
                    and self.curve_by_name[seg.curve].points
                    and seg.arc < len(self.curve_by_name[seg.curve].points)
                    for seg in cyc)
                if not usable:
                    continue
                for i, seg in enumerate(cyc):
                    nxt = cyc[(i + 1) % len(cyc)]
                    c1 = self.curve_by_name[seg.curve]
                    c2 = self.curve_by_name[nxt.curve]
                    p = segment_end(c1, seg)
                    if p != segment_start(c2, nxt):
                        v.append(f"region {r.name}: cycle breaks at "
                                 f"{seg} -> {nxt}")
                        continue
                    if c1.kind == c2.kind:
                        v.append(f"region {r.name}: segments {seg} and {nxt} "
                                 f"do not alternate families at {p}")
                        continue
                    arrive = -1 if seg.forward else 1
                    depart = 1 if nxt.forward else -1
                    if c1.kind == "alpha":
                        label = (arrive, depart)
                    else:
                        label = (depart, arrive)
                    slots = self.quadrant.setdefault(p, {})
                    if label in slots:
                        v.append(f"point {p}: quadrant {label} covered twice")
                    else:
                        slots[label] = ri
        for p in self.points:
            labels = self.quadrant.get(p, {})
            if len(labels) != 4:
                v.append(f"point {p} has {len(labels)} quadrant corners "
                         f"(need 4)")

        # connectivity over regions, curves and circles
        adj: dict[tuple[str, str], set[tuple[str, str]]] = {}

        def link(a, b):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)

        for c in d.curves:
            adj.setdefault(("curve", c.name), set())
        for cid in d.boundary_circles:
            adj.setdefault(("circle", cid), set())
        for r in d.regions:
            adj.setdefault(("region", r.name), set())
            for cyc in r.boundary_cycles:
                if isinstance(cyc, str):
                    if cyc in circle_uses:
                        link(("region", r.name), ("circle", cyc))
                else:
                    for seg in cyc:
                        if seg.curve in self.curve_by_name:
                            link(("region", r.name), ("curve", seg.curve))
        for p, (aname, _) in self.point_alpha.items():
            if p in self.point_beta:
                link(("curve", aname), ("curve", self.point_beta[p][0]))

        self.components: list[set[tuple[str, str]]] = []
        todo = set(adj)
        while todo:
            seed = todo.pop()
            comp = {seed}
            stack = [seed]
            while stack:
                for nb in adj[stack.pop()]:
                    if nb not in comp:
                        comp.add(nb)
                        todo.discard(nb)
                        stack.append(nb)
            self.components.append(comp)

    @property
    def interior(self) -> list[int]:
        return [i for i, r in enumerate(self.d.regions)
                if not r.touches_boundary]


@lru_cache(maxsize=None)
def _scan(d: Diagram) -> _Scan:
    return _Scan(d)


def diagram_index(d: Diagram) -> _Scan:
    """Incidence tables for a diagram that must already be valid."""
    s = _scan(d)
    if s.violations:
        raise ValueError("invalid diagram: " + "; ".join(s.violations[:3]))
    return s


# ---------------------------------------------------------------------------
# validation and Euler bookkeeping


@dataclass(frozen=True)
class ComponentSummary:
    euler: int
    boundary_count: int
    genus: int | None          # None when the Euler data is inconsistent


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[str, ...]
    components: tuple[ComponentSummary, ...]
    euler: int

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(d: Diagram) -> ValidationReport:
    """Check every diagram invariant; the report lists each violation."""
    s = _scan(d)
    violations = list(s.violations)

    summaries = []
    total = 0
    for comp in s.components:
        curves = [s.curve_by_name[n] for k, n in comp
                  if k == "curve" and n in s.curve_by_name]
        regions = [d.regions[s.region_pos[n]] for k, n in comp if k == "region"]
        circles = [n for k, n in comp if k == "circle"]
        pts = {p for c in curves if c.kind == "alpha" for p in c.points}
        chi_graph = len(pts) - sum(len(c.points) for c in curves)
        chi = chi_graph + sum(r.compact_euler() for r in regions)
        total += chi
        if not circles:
            violations.append("component without boundary circles "
                              "(closed component)")
        two_genus = 2 - chi - len(circles)
        if two_genus < 0 or two_genus % 2:
            violations.append(f"component Euler data inconsistent: chi={chi}, "
                              f"boundary={len(circles)}")
            genus = None
        else:
            genus = two_genus // 2
        summaries.append(ComponentSummary(chi, len(circles), genus))

    return ValidationReport(tuple(violations), tuple(summaries), total)


def euler_measure(r: Region) -> Fraction:
    """e(R) = chi of the closed-up region minus a quarter per corner."""
    return Fraction(r.compact_euler()) - Fraction(r.corner_count, 4)


# ---------------------------------------------------------------------------
# periodic domains and admissibility


@dataclass(frozen=True)
class PeriodicLattice:
    """Basis of boundary-avoiding periodic domains, aligned with d.regions."""

    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


def _jump_system(s: _Scan):
    """Arc-jump constancy equations over interior regions.

    One row per (curve, point); the row says that the multiplicity jump
    across the arc before the point equals the jump across the arc after it.
    Returns (rows, meta) with meta[i] = (curve kind, curve name, point).
    """
    interior = s.interior
    col = {ri: j for j, ri in enumerate(interior)}
    rows: list[list[int]] = []
    meta: list[tuple[str, str, str]] = []
    for c in s.d.curves:
        npts = len(c.points)
        for k, p in enumerate(c.points):
            row = [0] * len(interior)
            prev = (k - 1) % npts
            for arc, sign in ((prev, 1), (k, -1)):
                sides = s.arc_side.get((c.name, arc), {})
                for fwd, coeff in ((True, 1), (False, -1)):
                    ri = sides.get(fwd)
                    if ri is not None and ri in col:
                        row[col[ri]] += sign * coeff
            rows.append(row)
            meta.append((c.kind, c.name, p))
    return rows, meta


def periodic_lattice(d: Diagram) -> PeriodicLattice:
    s = diagram_index(d)
    interior = s.interior
    if not interior:
        return PeriodicLattice(())
    rows, _ = _jump_system(s)
    kernel = integer_kernel_basis(rows) if rows else \
        [tuple(int(i == j) for i in range(len(interior)))
         for j in range(len(interior))]
    basis = []
    for vec in kernel:
        full = [0] * len(d.regions)
        for j, ri in enumerate(interior):
            full[ri] = vec[j]
        basis.append(tuple(full))
    return PeriodicLattice(tuple(basis))


@dataclass(frozen=True)
class AdmissibilityResult:
    admissible: bool
    witness: tuple[int, ...] | None    # a nonzero nonnegative periodic domain


def _fm_witness(ineqs: list[tuple[list[Fraction], Fraction]],
                nvars: int) -> list[Fraction] | None:
    """A point satisfying coeffs . c >= rhs for every row, or None.

    Fourier-Motzkin elimination with back-substitution; exact rationals.
    """
    stages = [ineqs]
    for k in range(nvars - 1, 0, -1):
        cur = stages[0]
        pos = [q for q in cur if q[0][k] > 0]
        neg = [q for q in cur if q[0][k] < 0]
        zero = [q for q in cur if q[0][k] == 0]
        new = list(zero)
        for a, r in pos:
            for b, t in neg:
                coeffs = [a[k] * b[j] - b[k] * a[j] for j in range(k)]
                new.append((coeffs + [Fraction(0)] * (nvars - k),
                            a[k] * t - b[k] * r))
        stages.insert(0, new)

    sol = [Fraction(0)] * nvars
    for k in range(nvars):
        lo, hi = None, None
        for coeffs, rhs in stages[k]:
            rest = rhs - sum(coeffs[j] * sol[j] for j in range(k))
            ck = coeffs[k]
            if ck == 0:
                if rest > 0:
                    return None
            elif ck > 0:
                bound = rest / ck
                lo = bound if lo is None or bound > lo else lo
            else:
                bound = rest / ck
                hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None and lo > hi:
            return None
        sol[k] = lo if lo is not None else (hi if hi is not None else Fraction(0))
    return sol


def is_admissible(d: Diagram, max_rank: int = 6) -> AdmissibilityResult:
    """True iff every nonzero periodic domain has mixed signs."""
    lattice = periodic_lattice(d)
    r = lattice.rank
    if r == 0:
        return AdmissibilityResult(True, None)
    if r > max_rank:
        raise UndecidedBeyondBound(f"periodic lattice rank {r} > {max_rank}")
    if r == 1:
        vec = lattice.basis[0]
        if all(x >= 0 for x in vec):
            return AdmissibilityResult(False, vec)
        if all(x <= 0 for x in vec):
            return AdmissibilityResult(False, tuple(-x for x in vec))
        return AdmissibilityResult(True, None)

    nreg = len(d.regions)
    cols = [[Fraction(lattice.basis[i][j]) for i in range(r)]
            for j in range(nreg)]
    base = [(col[:], Fraction(0)) for col in cols if any(col)]
    for j in range(nreg):
        if not any(cols[j]):
            continue
        sol = _fm_witness(base + [(cols[j][:], Fraction(1))], r)
        if sol is not None:
            witness = [sum(sol[i] * lattice.basis[i][k] for i in range(r))
                       for k in range(nreg)]
            denom = 1
            for x in witness:
                denom = denom * x.denominator // gcd(denom, x.denominator)
            out = tuple(int(x * denom) for x in witness)
            assert all(x >= 0 for x in out) and any(out)
            return AdmissibilityResult(False, out)
    return AdmissibilityResult(True, None)


@dataclass(frozen=True)
class NicenessResult:
    nice: bool
    offenders: tuple[str, ...]


def is_nice(d: Diagram) -> NicenessResult:
    """Nice: every interior region is a disk with 2 or 4 corners."""
    diagram_index(d)
    bad = tuple(r.name for r in d.regions
                if not r.touches_boundary
                and not (r.genus == 0 and len(r.boundary_cycles) == 1
                         and r.corner_count in (2, 4)))
    return NicenessResult(not bad, bad)


# ---------------------------------------------------------------------------
# first homology of the glued-up 3-manifold


@dataclass(frozen=True)
class H1Presentation:
    """H1 of the sutured manifold as a quotient of the curve-graph cycles.

    Generators: a saturated basis of the cycle space of the curve graph
    together with the boundary circles, plus two free generators per unit
    of region genus.  Relations: each region's total boundary, and the
    class of each full curve.  The normalizer reduces any generator-coords
    vector to a canonical coset representative via the relation SNF.
    """

    generator_count: int
    relation_matrix: tuple[tuple[int, ...], ...]
    normal_form: object             # SNFResult of the relation matrix
    b1: int
    torsion: tuple[int, ...]
    _chain_solver: object
    _cycle_rank: int
    _arc_pos: dict
    _circle_pos: dict
    _v: tuple
    _vinv: tuple
    _diag_pad: tuple[int, ...]
    _free_idx: tuple[int, ...]

    def chain_coords(self, chain: dict) -> tuple[int, ...]:
        """Generator coordinates of a closed 1-chain.

        The chain is a map {(curve, arc) or circle id -> multiplicity};
        handle generators never appear in curve-graph chains.
        """
        n = len(self._arc_pos) + len(self._circle_pos)
        vec = [0] * n
        for key, mult in chain.items():
            pos = self._arc_pos.get(key)
            if pos is None:
                pos = self._circle_pos[key]
            vec[pos] += mult
        coords = self._chain_solver.solve(vec)
        if coords is None:
            raise ValueError("chain is not a cycle of the curve graph")
        return tuple(coords) + (0,) * (self.generator_count - self._cycle_rank)

    def normalize(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Canonical representative of v's coset modulo the relations."""
        if self.generator_count == 0:
            return ()
        w = list(vec_mat(v, [list(r) for r in self._v]))
        for i, di in enumerate(self._diag_pad):
            if di > 0:
                w[i] %= di
        return vec_mat(w, [list(r) for r in self._vinv])

    def free_part(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Coordinates of v in the free quotient Z^b1 (torsion dropped)."""
        if self.generator_count == 0:
            return ()
        w = vec_mat(v, [list(r) for r in self._v])
        return tuple(w[i] for i in self._free_idx)

    def reduce_chain(self, chain: dict) -> tuple[int, ...]:
        return self.normalize(self.chain_coords(chain))


@lru_cache(maxsize=None)
def h1_presentation(d: Diagram) -> H1Presentation:
    s = diagram_index(d)
    if len(s.components) != 1:
        raise Disconnected(f"{len(s.components)} components")

    arcs = [(c.name, k) for c in d.curves for k in range(len(c.points))]
    arc_pos = {a: i for i, a in enumerate(arcs)}
    circle_pos = {cid: len(arcs) + i
                  for i, cid in enumerate(d.boundary_circles)}
    n = len(arcs) + len(d.boundary_circles)
    point_row = {p: i for i, p in enumerate(s.points)}

    bd = [[0] * n for _ in s.points]
    for ai, (cname, k) in enumerate(arcs):
        start, end = s.curve_by_name[cname].arc_ends(k)
        bd[point_row[end]][ai] += 1
        bd[point_row[start]][ai] -= 1
    cycle_basis = integer_kernel_basis(bd) if s.points else \
        [tuple(int(i == j) for i in range(n)) for j in range(n)]
    cycle_rank = len(cycle_basis)
    solver = LinearSolver([[vec[i] for vec in cycle_basis]
                           for i in range(n)])

    handles = sum(2 * r.genus for r in d.regions)
    gen_count = cycle_rank + handles

    def coords_of(chain: dict) -> tuple[int, ...]:
        vec = [0] * n
        for key, mult in chain.items():
            pos = arc_pos.get(key)
            if pos is None:
                pos = circle_pos[key]
            vec[pos] += mult
        sol = solver.solve(vec)
        if sol is None:
            raise AssertionError("region/curve relation is not a cycle")
        return tuple(sol) + (0,) * handles

    relations = []
    for r in d.regions:
        chain: dict = {}
        for cyc in r.boundary_cycles:
            if isinstance(cyc, str):
                chain[cyc] = chain.get(cyc, 0) + 1
            else:
                for seg in cyc:
                    key = (seg.curve, seg.arc)
                    chain[key] = chain.get(key, 0) + (1 if seg.forward else -1)
        relations.append(list(coords_of(chain)))
    for c in d.curves:
        chain = {(c.name, k): 1 for k in range(len(c.points))}
        relations.append(list(coords_of(chain)))

    if not relations and gen_count:
        relations = [[0] * gen_count]
    if gen_count == 0:
        return H1Presentation(0, (), None, 0, (), solver, 0,
                              arc_pos, circle_pos, (), (), (), ())

    snf = smith_normal_form(relations)
    diag = list(snf.diagonal) + [0] * (gen_count - len(snf.diagonal))
    b1 = sum(1 for x in diag if x == 0)
    torsion = tuple(x for x in diag if x > 1)
    free_idx = tuple(i for i, x in enumerate(diag) if x == 0)
    vinv = unimodular_inverse(snf.v)

    return H1Presentation(
        generator_count=gen_count,
        relation_matrix=tuple(tuple(r) for r in relations),
        normal_form=snf,
        b1=b1,
        torsion=torsion,
        _chain_solver=solver,
        _cycle_rank=cycle_rank,
        _arc_pos=arc_pos,
        _circle_pos=circle_pos,
        _v=snf.v,
        _vinv=tuple(tuple(r) for r in vinv),
        _diag_pad=tuple(diag),
        _free_idx=free_idx,
    )
