"""Intersection generators, their class partition, and GF(2) homology.

A generator matches each alpha curve to one intersection point so that
the points lie on pairwise distinct beta curves.  The difference class
eps(x, y) is the H1 coset of the 1-cycle built from forward paths along
alpha curves minus forward paths along beta curves; it vanishes exactly
when an integer domain connects x to y (boundary regions pinned to 0).

The differential is combinatorial: on nice diagrams it counts empty
bigons and rectangles, which is exact; otherwise it can certify zero
when every candidate domain is non-positive or has index other than 1.
Anything else is reported as undetermined rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import (
    Diagram,
    PeriodicLattice,
    _jump_system,
    diagram_index,
    euler_measure,
    h1_presentation,
    is_nice,
    periodic_lattice,
)
from .exactalg import LinearSolver, gf2_rank_kernel


class LatticeNotZero(RuntimeError):
    """Connecting domains are not unique, so counting is refused."""


class NonIntegerIndex(ArithmeticError):
    """A Maslov index came out fractional: quadrant data is corrupted."""


class DifferentialUndetermined(RuntimeError):
    """No implemented counting rule settles the differential."""


# ---------------------------------------------------------------------------
# generators


@dataclass(frozen=True)
class Generator:
    """One point per alpha curve, the points on distinct beta curves."""

    matching: tuple[tuple[str, str], ...]       # (alpha curve id, point id)

    @property
    def points(self) -> tuple[str, ...]:
        return tuple(p for _, p in self.matching)

    def point_on(self, curve: str) -> str:
        for c, p in self.matching:
            if c == curve:
                return p
        raise KeyError(curve)

    def __str__(self) -> str:
        return "{" + ",".join(self.points) + "}"


def enumerate_generators(d: Diagram) -> tuple[Generator, ...]:
    """All generators, ordered by point id along sorted alpha curve ids."""
    s = diagram_index(d)
    alphas = sorted(c.name for c in d.alpha_curves)
    out: list[Generator] = []
    chosen: list[tuple[str, str]] = []
    used_beta: set[str] = set()

    def extend(i: int) -> None:
        if i == len(alphas):
            out.append(Generator(tuple(chosen)))
            return
        for p in sorted(s.curve_by_name[alphas[i]].points):
            beta = s.point_beta[p][0]
            if beta in used_beta:
                continue
            used_beta.add(beta)
            chosen.append((alphas[i], p))
            extend(i + 1)
            chosen.pop()
            used_beta.discard(beta)

    extend(0)
    return tuple(out)


def _beta_points(s, g: Generator) -> dict[str, str]:
    return {s.point_beta[p][0]: p for p in g.points}


# ---------------------------------------------------------------------------
# class partition via eps


def epsilon(d: Diagram, x: Generator, y: Generator) -> tuple[int, ...]:
    """Normalized H1 coset separating x from y (zero iff same class)."""
    s = diagram_index(d)
    h1 = h1_presentation(d)
    xb, yb = _beta_points(s, x), _beta_points(s, y)
    chain: dict = {}

    def add_path(curve, start: str, stop: str, coeff: int) -> None:
        n = len(curve.points)
        k = curve.points.index(start)
        stop_i = curve.points.index(stop)
        while k != stop_i:
            key = (curve.name, k)
            chain[key] = chain.get(key, 0) + coeff
            k = (k + 1) % n

    for c in d.alpha_curves:
        add_path(c, x.point_on(c.name), y.point_on(c.name), 1)
    for c in d.beta_curves:
        add_path(c, xb[c.name], yb[c.name], -1)
    return h1.reduce_chain(chain)


@dataclass(frozen=True)
class SpinAssignment:
    """Class index of a generator and the class's canonical coset."""

    class_id: int
    coset_rep: tuple[int, ...]


def partition_spinc(d: Diagram,
                    gens: tuple[Generator, ...]) -> tuple[SpinAssignment, ...]:
    """One assignment per generator; cosets are relative to gens[0]."""
    reps: dict[tuple[int, ...], int] = {}
    out = []
    for g in gens:
        rep = epsilon(d, g, gens[0])
        cid = reps.setdefault(rep, len(reps))
        out.append(SpinAssignment(cid, rep))
    return tuple(out)


# ---------------------------------------------------------------------------
# connecting domains


@dataclass(frozen=True)
class Domain:
    """Region multiplicities; zero on boundary-touching regions."""

    multiplicities: tuple[int, ...]


@dataclass(frozen=True)
class NoDomain:
    """The affine system is infeasible: the generators differ in class."""


@dataclass(frozen=True)
class NonUnique:
    """Solutions differ by a nonzero lattice of periodic domains."""

    lattice: PeriodicLattice


@lru_cache(maxsize=None)
def _domain_context(d: Diagram):
    s = diagram_index(d)
    rows, meta = _jump_system(s)
    solver = LinearSolver(rows) if rows and s.interior else None
    return s, meta, solver


def connecting_domain(d: Diagram, x: Generator,
                      y: Generator) -> Domain | NoDomain | NonUnique:
    """Solve for the domain from x to y over interior regions.

    The alpha part of its boundary runs from x to y, the beta part from
    y to x.  Unique when the periodic lattice is zero.
    """
    s, meta, solver = _domain_context(d)
    xa, ya = dict(x.matching), dict(y.matching)
    xb, yb = _beta_points(s, x), _beta_points(s, y)
    rhs = []
    for kind, cname, p in meta:
        if kind == "alpha":
            r = ((ya.get(cname) == p) - (xa.get(cname) == p))
        else:
            r = ((xb.get(cname) == p) - (yb.get(cname) == p))
        rhs.append(r)
    if not s.interior:
        return Domain((0,) * len(d.regions)) if not any(rhs) else NoDomain()
    if solver is None:                  # no rows: every vector is periodic
        return NonUnique(periodic_lattice(d))
    sol = solver.solve(rhs)
    if sol is None:
        return NoDomain()
    lat = periodic_lattice(d)
    if lat.rank:
        return NonUnique(lat)
    full = [0] * len(d.regions)
    for j, ri in enumerate(s.interior):
        full[ri] = sol[j]
    return Domain(tuple(full))


# ---------------------------------------------------------------------------
# Maslov index


def maslov_index(d: Diagram, dom: Domain, x: Generator, y: Generator) -> int:
    """Index of dom as a class from x to y.

    Euler measures weighted by multiplicity plus the average quadrant
    multiplicity over the points of x and of y.
    """
    s = diagram_index(d)
    m = dom.multiplicities
    mu = Fraction(0)
    for mult, r in zip(m, d.regions):
        if mult:
            mu += mult * euler_measure(r)
    for g in (x, y):
        for p in g.points:
            mu += Fraction(sum(m[ri] for ri in s.quadrant[p].values()), 4)
    if mu.denominator != 1:
        raise NonIntegerIndex(f"index {mu} between {x} and {y}")
    return int(mu)


# ---------------------------------------------------------------------------
# differential


@dataclass(frozen=True)
class Exact:
    """Differential matrix over GF(2); matrix[i][j] is the x_i -> x_j entry."""

    matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ZeroCertificate:
    """Every class-mate domain is non-positive or of index != 1: d = 0."""


@dataclass(frozen=True)
class Undetermined:
    """Some positive index-1 domain exists on a non-nice diagram."""


def _coordinate_diff(x: Generator, y: Generator) -> int:
    return sum(p != q for (_, p), (_, q) in zip(x.matching, y.matching))


def _empty_at_shared(s, dom: Domain, x: Generator, y: Generator) -> bool:
    shared = set(x.points) & set(y.points)
    m = dom.multiplicities
    return all(sum(m[ri] for ri in s.quadrant[p].values()) == 0
               for p in shared)


def _class_members(assignments) -> list[list[int]]:
    by_class: dict[int, list[int]] = {}
    for i, a in enumerate(assignments):
        by_class.setdefault(a.class_id, []).append(i)
    return [by_class[cid] for cid in sorted(by_class)]


def differential(d: Diagram, gens: tuple[Generator, ...],
                 assignments: tuple[SpinAssignment, ...]):
    """Exact matrix on nice diagrams, else ZeroCertificate or Undetermined."""
    if periodic_lattice(d).rank:
        raise LatticeNotZero("periodic domains make counting ambiguous")
    s = diagram_index(d)
    classes = _class_members(assignments)
    if is_nice(d).nice:
        n = len(gens)
        matrix = [[0] * n for _ in range(n)]
        for members in classes:
            for i in members:
                for j in members:
                    if i == j or not 1 <= _coordinate_diff(gens[i],
                                                           gens[j]) <= 2:
                        continue
                    dom = connecting_domain(d, gens[i], gens[j])
                    assert isinstance(dom, Domain)
                    if any(mult not in (0, 1)
                           for mult in dom.multiplicities):
                        continue
                    if maslov_index(d, dom, gens[i], gens[j]) != 1:
                        continue
                    if _empty_at_shared(s, dom, gens[i], gens[j]):
                        matrix[i][j] = 1
        return Exact(tuple(tuple(row) for row in matrix))
    for members in classes:
        for i in members:
            for j in members:
                if i == j:
                    continue
                dom = connecting_domain(d, gens[i], gens[j])
                if isinstance(dom, NoDomain):
                    continue
                if all(mult >= 0 for mult in dom.multiplicities) and \
                        maslov_index(d, dom, gens[i], gens[j]) == 1:
                    return Undetermined()
    return ZeroCertificate()


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class ClassRow:
    """Homology data of one generator class."""

    class_id: int
    members: tuple[int, ...]            # generator indices
    gen_count: int
    diff_rank: int
    dimension: int
    coset_rep: tuple[int, ...]
    free_coords: tuple[int, ...]
    gradings: tuple[int, ...]           # relative, aligned with members


@dataclass(frozen=True)
class SFHTable:
    """Per-class GF(2) homology dimensions with relative gradings."""

    generators: tuple[Generator, ...]
    assignments: tuple[SpinAssignment, ...]
    classes: tuple[ClassRow, ...]
    b1: int
    torsion: tuple[int, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.dimension for c in self.classes)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)


def _assert_boundary_squared_zero(matrix) -> None:
    n = len(matrix)
    for i in range(n):
        for k in range(n):
            if sum(matrix[i][j] * matrix[j][k] for j in range(n)) % 2:
                raise AssertionError("differential does not square to zero")


def homology(d: Diagram) -> SFHTable:
    """Class-by-class homology table; raises if the differential is open."""
    gens = enumerate_generators(d)
    h1 = h1_presentation(d)
    if not gens:
        return SFHTable((), (), (), h1.b1, h1.torsion)
    assignments = partition_spinc(d, gens)
    res = differential(d, gens, assignments)
    if isinstance(res, Undetermined):
        raise DifferentialUndetermined("no combinatorial count applies")
    if isinstance(res, Exact):
        _assert_boundary_squared_zero(res.matrix)
    rows = []
    for cid, members in enumerate(_class_members(assignments)):
        if isinstance(res, Exact):
            sub = [[res.matrix[i][j] for j in members] for i in members]
            rank, _ = gf2_rank_kernel(sub)
        else:
            rank = 0
        count = len(members)
        dim = count - 2 * rank
        assert dim >= 0
        first = members[0]
        grads = []
        for g in members:
            dom = connecting_domain(d, gens[first], gens[g])
            assert isinstance(dom, Domain)
            grads.append(-maslov_index(d, dom, gens[first], gens[g]))
        rep = assignments[first].coset_rep
        rows.append(ClassRow(cid, tuple(members), count, rank, dim, rep,
                             h1.free_part(rep), tuple(grads)))
    table = SFHTable(gens, assignments, tuple(rows), h1.b1, h1.torsion)
    assert sum(c.gen_count for c in table.classes) == len(gens)
    return table
