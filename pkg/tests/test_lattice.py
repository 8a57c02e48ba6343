import random

import pytest

from icetilt.algebra import load_fixture
from icetilt.errors import NotWide, TooManyIndecs
from icetilt.lattice import SubcatLattice, hasse, popcount
from icetilt.modcat import build_table, ext_middle_terms


@pytest.fixture(scope="module")
def a2():
    return SubcatLattice(build_table(load_fixture("a2")))


@pytest.fixture(scope="module")
def nak():
    return SubcatLattice(build_table(load_fixture("nak")))


@pytest.fixture(scope="module", params=["a2", "a3", "nak", "nonnak"])
def any_lat(request):
    return SubcatLattice(build_table(load_fixture(request.param)))


def m(lat, *names):
    return lat.mask_of(names)


def test_closure_predicates_a2(a2):
    assert a2.is_quotient_closed(a2.full)
    assert not a2.is_quotient_closed(m(a2, "2/1"))
    assert a2.is_quotient_closed(m(a2, "2/1", "2"))
    assert not a2.is_extension_closed(m(a2, "1", "2"))
    assert a2.is_extension_closed(a2.full)
    for k in range(a2.n):
        if a2.table.ext_dim[k, k] == 0:
            assert a2.is_extension_closed(1 << k)


def test_enumeration_matches_scan(any_lat):
    tors = any_lat.enumerate_tors()
    assert len(tors) == len(any_lat.enumerate_torf())
    assert sorted(any_lat.enumerate_tors_by_closure()) == sorted(tors)
    brute = [s for s in range(1 << any_lat.n) if any_lat.is_torsion_class(s)]
    assert sorted(brute) == sorted(tors)


def test_fixture_tors_counts():
    for name, count in {"a2": 5, "a3": 14, "nak": 12, "nonnak": 12}.items():
        lat = SubcatLattice(build_table(load_fixture(name)))
        assert len(lat.enumerate_tors()) == count


def test_closures_a2(a2):
    assert a2.tors_closure(0) == 0
    assert a2.tors_closure(m(a2, "2/1")) == m(a2, "2/1", "2")
    assert a2.torf_closure(m(a2, "2/1")) == m(a2, "2/1", "1")


def test_perps_a2(a2):
    assert a2.perp_right(0) == a2.full
    assert a2.perp_right(m(a2, "2/1", "2")) == m(a2, "1")


def test_hasse_examples(a2, nak):
    h = a2.tors_hasse()
    assert len(h.nodes) == 5 and len(h.arrows) == 5
    chain = hasse([0b1, 0b11, 0b111])
    assert len(chain.arrows) == 2
    assert len(nak.tors_hasse().arrows) == 18


def test_join_meet(a2):
    t1 = a2.tors_closure(m(a2, "1"))
    t2 = a2.tors_closure(m(a2, "2"))
    assert a2.join([t1, 0]) == t1
    assert a2.join([t1, t2]) == a2.full
    assert a2.meet(a2.enumerate_tors()) == 0


def test_u_plus(a2, nak):
    assert a2.u_plus(0) == a2.full
    assert a2.u_plus(a2.full) == a2.full
    fac = nak.tors_closure(m(nak, "3/2", "3"))
    assert nak.u_plus(fac) == nak.full


def test_f_minus(a2, any_lat):
    assert a2.f_minus(0) == 0
    torf = a2.enumerate_torf()
    maximal = [f for f in torf if f != a2.full and not any(g != a2.full and g > f and g & f == f for g in torf)]
    assert a2.f_minus(a2.full) == a2.meet(maximal)
    for f in any_lat.enumerate_torf():
        assert any_lat.f_minus(f) == any_lat.f_minus_via_wide(f)


def test_relative_ops(a2, any_lat):
    assert sorted(any_lat.tors_in(any_lat.full)) == sorted(any_lat.enumerate_tors())
    w = m(a2, "2/1")
    assert sorted(a2.tors_in(w)) == [0, w]
    assert a2.simples_of_wide(w) == w
    with pytest.raises(NotWide):
        a2.tors_in(m(a2, "1", "2"))


def test_simple_count_matches_arrows_into(any_lat):
    h = any_lat.tors_hasse()
    for k, u in enumerate(h.nodes):
        w = any_lat.heart(u, any_lat.u_plus(u))
        assert popcount(any_lat.simples_of_wide(w)) == len(h.predecessors(k))


def test_perp_double_dual_all_subsets(any_lat):
    for s in range(1 << any_lat.n):
        assert any_lat.tors_closure(s) == any_lat.perp_left(any_lat.perp_right(s))
        assert any_lat.torf_closure(s) == any_lat.perp_right(any_lat.perp_left(s))


def test_anti_isomorphism(any_lat):
    tors = any_lat.enumerate_tors()
    torf = set(any_lat.enumerate_torf())
    for t in tors:
        f = any_lat.perp_right(t)
        assert f in torf
        assert any_lat.perp_left(f) == t
        for u in tors:
            if u & t == u:
                g = any_lat.perp_right(u)
                assert f & g == f


def test_star_identity(any_lat):
    # every indec of F has a sub in the heart [G, F] and quotient in G
    table = any_lat.table
    torf = any_lat.enumerate_torf()
    for f in torf:
        for g in torf:
            if g & f != g:
                continue
            h = f & any_lat.perp_left(g)
            for k in any_lat.members(f):
                ok = any((table.mask(sub) | h) == h and (table.mask(quo) | g) == g
                         for sub, quo in table.sub_quot[k])
                assert ok


def test_extension_closure_on_decomposable_ends(any_lat):
    table = any_lat.table
    rng = random.Random(7)
    tors = [t for t in any_lat.enumerate_tors() if t]
    for _ in range(200):
        t = rng.choice(tors)
        members = any_lat.members(t)
        l_expr = [rng.choice(members) for _ in range(rng.randint(1, 2))]
        n_expr = [rng.choice(members) for _ in range(rng.randint(1, 2))]
        mids = ext_middle_terms(table, table.module_of(l_expr), table.module_of(n_expr))
        for mid in mids:
            assert table.mask(mid) | t == t


def test_too_many_indecs(a2):
    with pytest.raises(TooManyIndecs):
        a2._check_size(25)
