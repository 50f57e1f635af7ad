"""Generators, eps partition, domains, Maslov indices, homology.

Frozen values were computed by hand on the conftest fixtures: the pants
bigon connects {u} to {v} with index 1, the three-punctured grid has one
empty rectangle S10 from (p01,p10) to (p00,p11), and the four-punctured
grid splits its two generators into distinct classes with H1 = Z.
A brute-force search over small multiplicity vectors double-checks every
connecting-domain answer against the raw region cycles.
"""

from __future__ import annotations

import itertools

import pytest

from sfhpoly.diagram import Curve, Diagram, Region, diagram_index
from sfhpoly.floer import (
    DifferentialUndetermined,
    Domain,
    Exact,
    LatticeNotZero,
    NoDomain,
    NonUnique,
    Undetermined,
    ZeroCertificate,
    connecting_domain,
    differential,
    enumerate_generators,
    epsilon,
    homology,
    maslov_index,
    partition_spinc,
)
from conftest import seg, torus_grid


@pytest.fixture
def grid_four() -> Diagram:
    return torus_grid(("S00", "S01", "S10", "S11"))


@pytest.fixture
def pants_rev() -> Diagram:
    """Pair of pants with the upward bigon punctured instead: {v} -> {u}."""
    a = Curve("alpha", "a", ("u", "v"))
    b = Curve("beta", "b", ("u", "v"))
    return Diagram((a,), (b,), ("s0", "s1", "s2"), (
        Region("up", 0, ((seg("a", 0, +1), seg("b", 0, -1)), "s2")),
        Region("dn", 0, ((seg("a", 0, -1), seg("b", 1, -1)),)),
        Region("outU", 0, ((seg("b", 0, +1), seg("a", 1, +1)), "s0")),
        Region("outL", 0, ((seg("b", 1, +1), seg("a", 1, -1)), "s1")),
    ))


def genus_bump(d: Diagram, target: str) -> Diagram:
    bumped = tuple(r if r.name != target else
                   Region(r.name, 1, r.boundary_cycles) for r in d.regions)
    return Diagram(d.alpha_curves, d.beta_curves, d.boundary_circles, bumped)


def hand_stabilized(d: Diagram, target: str) -> Diagram:
    """Add a one-point alpha/beta pair living inside an existing region."""
    za = Curve("alpha", "zs", ("w",))
    zb = Curve("beta", "zt", ("w",))
    square = (seg("zs", 0, +1), seg("zt", 0, +1),
              seg("zs", 0, -1), seg("zt", 0, -1))
    regions = tuple(r if r.name != target else
                    Region(r.name, r.genus, r.boundary_cycles + (square,))
                    for r in d.regions)
    return Diagram(d.alpha_curves + (za,), d.beta_curves + (zb,),
                   d.boundary_circles, regions)


# ---------------------------------------------------------------------------
# generator enumeration


def test_generators_core(pants_bigon):
    gens = enumerate_generators(pants_bigon)
    assert [g.matching for g in gens] == [((("a", "u")),), (("a", "v"),)]
    assert gens[0].points == ("u",) and gens[0].point_on("a") == "u"


def test_generators_grid(grid_rect):
    gens = enumerate_generators(grid_rect)
    assert [g.points for g in gens] == [("p00", "p11"), ("p01", "p10")]


def test_generators_empty_matching(disk_product):
    gens = enumerate_generators(disk_product)
    assert len(gens) == 1 and gens[0].matching == ()


# ---------------------------------------------------------------------------
# eps and the class partition


def test_epsilon_self_vanishes(pants_bigon, grid_rect):
    for d in (pants_bigon, grid_rect):
        gens = enumerate_generators(d)
        zero = epsilon(d, gens[0], gens[0])
        assert not any(zero)
        assert epsilon(d, gens[-1], gens[-1]) == zero


def test_single_class_fixtures(pants_bigon, grid_rect, grid_diag):
    for d in (pants_bigon, grid_rect, grid_diag):
        gens = enumerate_generators(d)
        assigns = partition_spinc(d, gens)
        assert {a.class_id for a in assigns} == {0}


def test_two_classes_grid_four(grid_four):
    gens = enumerate_generators(grid_four)
    assigns = partition_spinc(d=grid_four, gens=gens)
    assert [a.class_id for a in assigns] == [0, 1]
    assert not any(assigns[0].coset_rep)
    assert any(assigns[1].coset_rep)


def test_epsilon_cocycle(pants_bigon, grid_rect, grid_four, grid_diag):
    for d in (pants_bigon, grid_rect, grid_four, grid_diag):
        gens = enumerate_generators(d)
        from sfhpoly.diagram import h1_presentation
        h1 = h1_presentation(d)
        for x, y, z in itertools.product(gens, repeat=3):
            lhs = tuple(a + b - c for a, b, c in
                        zip(epsilon(d, x, y), epsilon(d, y, z),
                            epsilon(d, x, z)))
            assert not any(h1.normalize(lhs))


# ---------------------------------------------------------------------------
# connecting domains


def test_domain_zero_on_equal(pants_bigon, disk_product):
    for d in (pants_bigon, disk_product):
        gens = enumerate_generators(d)
        dom = connecting_domain(d, gens[0], gens[0])
        assert dom == Domain((0,) * len(d.regions))


def test_domain_bigon(pants_bigon):
    gu, gv = enumerate_generators(pants_bigon)
    assert connecting_domain(pants_bigon, gu, gv) == Domain((1, 0, 0, 0))
    assert connecting_domain(pants_bigon, gv, gu) == Domain((-1, 0, 0, 0))


def test_domain_rectangle(grid_rect):
    g0, g1 = enumerate_generators(grid_rect)
    assert connecting_domain(grid_rect, g1, g0) == Domain((0, 0, 1, 0))
    assert connecting_domain(grid_rect, g0, g1) == Domain((0, 0, -1, 0))


def test_domain_cross_class(grid_four):
    g0, g1 = enumerate_generators(grid_four)
    assert connecting_domain(grid_four, g0, g1) == NoDomain()
    assert connecting_domain(grid_four, g1, g0) == NoDomain()


def test_domain_non_unique(annulus_isotopic, annulus_slack):
    for d in (annulus_isotopic, annulus_slack):
        gens = enumerate_generators(d)
        dom = connecting_domain(d, gens[0], gens[1])
        assert isinstance(dom, NonUnique) and dom.lattice.rank == 1


def test_domain_exists_iff_eps_zero(pants_bigon, grid_rect, grid_four):
    for d in (pants_bigon, grid_rect, grid_four):
        gens = enumerate_generators(d)
        for x, y in itertools.product(gens, repeat=2):
            dom = connecting_domain(d, x, y)
            assert isinstance(dom, Domain) == (not any(epsilon(d, x, y)))


def _jump_from_cycles(d: Diagram, m, curve: Curve, arc: int) -> int:
    t = 0
    for mult, r in zip(m, d.regions):
        if not mult:
            continue
        for cyc in r.arc_cycles:
            for sg in cyc:
                if sg.curve == curve.name and sg.arc == arc:
                    t += mult if sg.forward else -mult
    return t


def _oracle_connects(d: Diagram, m, x, y) -> bool:
    """Check a full multiplicity vector against the raw region cycles."""
    s = diagram_index(d)
    for mult, r in zip(m, d.regions):
        if mult and r.touches_boundary:
            return False
    xa, ya = dict(x.matching), dict(y.matching)
    xb = {s.point_beta[p][0]: p for p in x.points}
    yb = {s.point_beta[p][0]: p for p in y.points}
    for c in d.curves:
        n = len(c.points)
        for k, p in enumerate(c.points):
            jump_in = _jump_from_cycles(d, m, c, (k - 1) % n)
            jump_out = _jump_from_cycles(d, m, c, k)
            if c.kind == "alpha":
                want = (ya.get(c.name) == p) - (xa.get(c.name) == p)
            else:
                want = (xb.get(c.name) == p) - (yb.get(c.name) == p)
            if jump_in - jump_out != want:
                return False
    return True


def test_domain_against_bruteforce(pants_bigon, pants_rev, grid_rect,
                                   grid_four):
    for d in (pants_bigon, pants_rev, grid_rect, grid_four):
        interior = [i for i, r in enumerate(d.regions)
                    if not r.touches_boundary]
        gens = enumerate_generators(d)
        for x, y in itertools.product(gens, repeat=2):
            found = []
            for vals in itertools.product(range(-3, 4), repeat=len(interior)):
                m = [0] * len(d.regions)
                for i, v in zip(interior, vals):
                    m[i] = v
                if _oracle_connects(d, m, x, y):
                    found.append(tuple(m))
            dom = connecting_domain(d, x, y)
            if isinstance(dom, Domain):
                assert found == [dom.multiplicities]
            else:
                assert found == []


# ---------------------------------------------------------------------------
# Maslov indices


def test_maslov_frozen(pants_bigon, grid_rect):
    gu, gv = enumerate_generators(pants_bigon)
    zero = Domain((0,) * 4)
    assert maslov_index(pants_bigon, zero, gu, gu) == 0
    up = connecting_domain(pants_bigon, gu, gv)
    assert maslov_index(pants_bigon, up, gu, gv) == 1
    dn = connecting_domain(pants_bigon, gv, gu)
    assert maslov_index(pants_bigon, dn, gv, gu) == -1

    g0, g1 = enumerate_generators(grid_rect)
    rect = connecting_domain(grid_rect, g1, g0)
    assert maslov_index(grid_rect, rect, g1, g0) == 1
    assert maslov_index(grid_rect, connecting_domain(grid_rect, g0, g1),
                        g0, g1) == -1


def test_maslov_additive(pants_bigon, grid_rect):
    for d in (pants_bigon, grid_rect):
        gens = enumerate_generators(d)
        for x, y, z in itertools.product(gens, repeat=3):
            dxy = connecting_domain(d, x, y)
            dyz = connecting_domain(d, y, z)
            dxz = connecting_domain(d, x, z)
            total = Domain(tuple(a + b for a, b in
                                 zip(dxy.multiplicities, dyz.multiplicities)))
            assert total == dxz
            assert maslov_index(d, dxy, x, y) + maslov_index(d, dyz, y, z) \
                == maslov_index(d, dxz, x, z)


# ---------------------------------------------------------------------------
# differential


def test_differential_bigon(pants_bigon):
    gens = enumerate_generators(pants_bigon)
    res = differential(pants_bigon, gens, partition_spinc(pants_bigon, gens))
    assert isinstance(res, Exact)
    assert res.matrix == ((0, 1), (0, 0))


def test_differential_bigon_reverse(pants_rev):
    gens = enumerate_generators(pants_rev)
    res = differential(pants_rev, gens, partition_spinc(pants_rev, gens))
    assert res.matrix == ((0, 0), (1, 0))


def test_differential_rectangle(grid_rect):
    gens = enumerate_generators(grid_rect)
    res = differential(grid_rect, gens, partition_spinc(grid_rect, gens))
    assert res.matrix == ((0, 0), (1, 0))


def test_differential_no_classmates(grid_four):
    gens = enumerate_generators(grid_four)
    res = differential(grid_four, gens, partition_spinc(grid_four, gens))
    assert res.matrix == ((0, 0), (0, 0))


def test_differential_lattice_guard(annulus_isotopic, annulus_slack):
    for d in (annulus_isotopic, annulus_slack):
        gens = enumerate_generators(d)
        with pytest.raises(LatticeNotZero):
            differential(d, gens, partition_spinc(d, gens))


def test_differential_zero_certificate(grid_rect):
    d = genus_bump(grid_rect, "S10")
    gens = enumerate_generators(d)
    res = differential(d, gens, partition_spinc(d, gens))
    assert res == ZeroCertificate()


def test_differential_undetermined(grid_rect):
    d = hand_stabilized(grid_rect, "S10")
    gens = enumerate_generators(d)
    res = differential(d, gens, partition_spinc(d, gens))
    assert res == Undetermined()
    with pytest.raises(DifferentialUndetermined):
        homology(d)


# ---------------------------------------------------------------------------
# homology tables


def test_homology_bigon(pants_bigon):
    t = homology(pants_bigon)
    assert t.dims == (0,) and t.total_dim == 0
    (row,) = t.classes
    assert (row.gen_count, row.diff_rank, row.dimension) == (2, 1, 0)
    assert row.gradings == (0, -1)
    assert (t.b1, t.torsion) == (0, ())


def test_homology_rectangle(grid_rect):
    t = homology(grid_rect)
    (row,) = t.classes
    assert (row.gen_count, row.diff_rank, row.dimension) == (2, 1, 0)
    assert row.gradings == (0, 1)


def test_homology_product(disk_product):
    t = homology(disk_product)
    assert t.dims == (1,) and t.classes[0].gradings == (0,)
    assert t.b1 == 0


def test_homology_two_classes(grid_four):
    t = homology(grid_four)
    assert t.dims == (1, 1)
    assert (t.b1, t.torsion) == (1, ())
    assert t.classes[0].free_coords == (0,)
    assert abs(t.classes[1].free_coords[0]) == 1
    assert t.classes[0].gradings == (0,) and t.classes[1].gradings == (0,)


def test_homology_zero_certificate_dims(grid_rect):
    t = homology(genus_bump(grid_rect, "S10"))
    (row,) = t.classes
    assert (row.gen_count, row.diff_rank, row.dimension) == (2, 0, 2)
    assert row.gradings == (0, -1)


def test_homology_stabilize_into_boundary_region(grid_rect):
    t = homology(hand_stabilized(grid_rect, "S00"))
    (row,) = t.classes
    assert (row.gen_count, row.dimension) == (2, 0)
    assert row.gradings == (0, 1)


def test_homology_lattice_guard(annulus_isotopic):
    with pytest.raises(LatticeNotZero):
        homology(annulus_isotopic)
