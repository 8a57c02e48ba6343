import random
from itertools import combinations

import pytest

from icetilt.algebra import load_fixture
from icetilt.ice import IceCore, is_ice_direct, is_wide
from icetilt.lattice import SubcatLattice, hasse, subset
from icetilt.modcat import build_table
from icetilt.verify import FixtureRun

FIXTURES = ["a2", "a3", "nak", "nonnak"]


@pytest.fixture(scope="module")
def runs():
    return {name: FixtureRun(name) for name in FIXTURES}


@pytest.fixture(params=FIXTURES)
def run(request, runs):
    return runs[request.param]


def test_heart_examples(runs):
    a2 = runs["a2"]
    for t in a2.lat.enumerate_tors():
        assert a2.core.heart(t, t) == 0
    t2 = a2.tors_by_progenerator("2")
    assert a2.core.heart(0, t2) == a2.subcat("2")
    nak = runs["nak"]
    u, t = nak.tors_by_progenerator("3/2+3"), nak.tors_by_progenerator("2+2/1+3/2")
    assert nak.core.heart(u, t) == nak.subcat("2", "2/1")


def test_brick_label_examples(runs):
    a2 = runs["a2"]
    t4, t3, t2 = (a2.tors_by_progenerator(g) for g in ["1+2/1", "2+2/1", "2"])
    assert a2.table.names[a2.core.brick_label(t4, t3)] == "1"
    assert a2.table.names[a2.core.brick_label(t3, t2)] == "2/1"
    nak = runs["nak"]
    upper, lower = nak.tors_by_progenerator("1+3/2+3"), nak.tors_by_progenerator("3/2+3")
    assert nak.table.names[nak.core.brick_label(upper, lower)] == "1"


def _paths(h, max_len):
    out = [[(i, j)] for i, j, _ in h.arrows]
    frontier = out
    for _ in range(max_len - 1):
        frontier = [p + [(j, k)] for p in frontier for (j, k, _) in h.arrows if j == p[-1][1]]
        out = out + frontier
    return out


def test_heart_via_labels_all_short_paths(run):
    core = run.core
    assert core.heart_via_labels([]) == 0
    h = run.lat.tors_hasse()
    for path in _paths(h, 4):
        upper, lower = h.nodes[path[0][0]], h.nodes[path[-1][1]]
        assert core.heart_via_labels(path) == core.heart(lower, upper)


def test_heart_via_labels_a2_path(runs):
    a2 = runs["a2"]
    h = a2.lat.tors_hasse()
    t3, t2 = h.index(a2.tors_by_progenerator("2+2/1")), h.index(a2.tors_by_progenerator("2"))
    zero = h.index(0)
    assert a2.core.heart_via_labels([(t3, t2), (t2, zero)]) == a2.subcat("2", "2/1")


def test_brick_labels_are_bricks_with_unique_filtration(run):
    core = run.core
    h = core.labeled_tors_hasse()
    for i, j, label in h.arrows:
        assert core.bricks() >> label & 1
        assert run.lat.filt_closure(1 << label) == core.heart(h.nodes[j], h.nodes[i])


def test_is_ice_interval_examples(runs):
    a2 = runs["a2"]
    for u in a2.lat.enumerate_tors():
        assert a2.core.is_ice_interval(u, u)
    assert a2.core.is_ice_interval(a2.tors_by_progenerator("1"), a2.lat.full)


def test_ice_counts(runs):
    assert [len(runs[n].core.enumerate_ice()) for n in FIXTURES] == [6, 22, 16, 16]


def test_is_ice_direct_examples(runs):
    nak, a2 = runs["nak"], runs["a2"]
    assert not nak.core.is_ice_direct(nak.subcat("2", "3/2"))
    assert nak.core.is_ice_direct(nak.lat.full)
    assert a2.core.is_ice_direct(a2.subcat("2/1"))
    with pytest.raises(ValueError):
        is_ice_direct(a2.lat, 0, max_mult=0)


@pytest.mark.parametrize("name", ["a2", "nak"])
def test_ice_direct_oracle_agrees(runs, name):
    run = runs[name]
    direct = [s for s in range(1 << run.lat.n) if run.core.is_ice_direct(s, 2)]
    assert sorted(direct) == sorted(run.core.enumerate_ice())


def test_wide_of_torsionfree_examples(runs):
    a2 = runs["a2"]
    assert a2.core.wide_of_torsionfree(a2.lat.full) == a2.lat.full
    f = a2.lat.torf_closure(a2.subcat("2/1"))
    assert a2.core.wide_of_torsionfree(f) == a2.subcat("2/1")


def test_wide_of_tors_is_a_bijection(run):
    core, lat = run.core, run.lat
    wides = [core.wide_of_tors(u) for u in lat.enumerate_tors()]
    assert len(set(wides)) == len(wides)
    assert core.wide_of_tors(lat.full) == 0
    all_wide = [s for s in range(1 << lat.n) if is_wide(lat, s)]
    assert sorted(all_wide) == sorted(wides)
    ice = set(core.enumerate_ice())
    assert set(wides) <= ice
    assert set(wides) == {core.smallest_wide_containing(c) for c in ice}


def test_wide_of_tors_nak_example(runs):
    nak = runs["nak"]
    u = nak.tors_by_progenerator("3/2+3")
    assert nak.core.wide_of_tors(u) == nak.core.smallest_wide_containing(nak.subcat("2", "2/1"))


def test_smallest_wide_examples(runs):
    a2 = runs["a2"]
    assert a2.core.smallest_wide_containing(a2.subcat("2")) == a2.subcat("2")
    assert a2.core.smallest_wide_containing(a2.subcat("2", "2/1")) == a2.lat.full
    assert a2.core.smallest_wide_containing(0) == 0


def test_progenerator_examples(runs):
    a2 = runs["a2"]
    name = a2.table.expr_name
    assert name(a2.core.progenerator(a2.lat.full)) == "1⊕2/1"
    assert name(a2.core.progenerator(a2.subcat("2/1"))) == "2/1"
    assert a2.core.progenerator(0) == ()


def test_enough_projectives(run):
    for c in run.core.enumerate_ice():
        assert run.core.verify_enough_projectives(c)


def test_wide_tau_tilting_of_interval_examples(runs):
    nak = runs["nak"]
    u, t = nak.tors_by_progenerator("3/2+3"), nak.tors_by_progenerator("2+2/1+3/2")
    assert nak.table.expr_name(nak.core.wide_tau_tilting_of_interval(u, t)) == "2⊕2/1"
    for t in nak.lat.enumerate_tors():
        assert nak.core.wide_tau_tilting_of_interval(t, t) == ()
        assert nak.core.wide_tau_tilting_of_interval(0, t) == nak.core.progenerator(t)


def test_count_formula_all_intervals(run):
    for lo, up in run.core.ice_intervals():
        assert run.core.count_formula_check(lo, up)


def test_sincerity_examples(runs):
    nak = runs["nak"]
    u, t = nak.tors_by_progenerator("3/2+3"), nak.tors_by_progenerator("2+2/1+3/2")
    assert nak.core.is_sincere(u, t)
    assert not nak.core.is_sincere(0, nak.tors_by_progenerator("2+2/1"))
    assert nak.core.is_sincere(nak.lat.full, nak.lat.full)


def test_sincere_criteria_agree_everywhere(run):
    for lo, up in run.core.ice_intervals():
        run.core.is_sincere(lo, up)


def test_wttilt_pairs(runs):
    a2 = runs["a2"]
    modules = {a2.table.expr_name(m) for _, m in a2.core.enumerate_wttilt()}
    assert modules == {"1⊕2/1", "2⊕2/1", "1", "2", "2/1", "0"}
    assert len(runs["nak"].core.enumerate_wttilt()) == 16


def test_serre_pairs_are_support_tau_tilting(run):
    assert run.core.serre_check()


def test_realize_as_heart(run):
    for c in run.core.enumerate_ice():
        run.core.realize_as_heart(c)
    assert run.core.realize_as_heart(0) == (0, 0)


def test_realize_as_heart_a2(runs):
    a2 = runs["a2"]
    g, f = a2.core.realize_as_heart(a2.subcat("2/1"))
    assert f == a2.subcat("1", "2/1") and g == a2.subcat("1")


def test_ice_interval_characterisation(run):
    core, lat = run.core, run.lat
    tors = lat.enumerate_tors()
    for lo, up in core.all_intervals():
        by_plus = core.is_ice_interval(lo, up)
        ice_heart = core.is_ice_direct(core.heart(lo, up))
        wide_above = any(subset(up, t2) and is_wide(lat, core.heart(lo, t2)) for t2 in tors if subset(lo, t2))
        assert by_plus == ice_heart == wide_above


def test_tors_of_wide_is_full_subquiver(run):
    core, lat = run.core, run.lat
    ice_h = core.ice_hasse()
    ice_arrows = {(ice_h.nodes[i], ice_h.nodes[j]) for i, j, _ in ice_h.arrows}
    for u in lat.enumerate_tors():
        w = core.wide_of_tors(u)
        inner = lat.tors_in(w)
        assert set(inner) <= set(ice_h.nodes)
        h = hasse(inner)
        inner_arrows = {(h.nodes[i], h.nodes[j]) for i, j, _ in h.arrows}
        restricted = {(a, b) for a, b in ice_arrows if a in inner and b in inner}
        assert inner_arrows == restricted


def test_closed_sublattice(run):
    core, lat = run.core, run.lat
    rng = random.Random(11)
    inners = [lat.tors_in(core.wide_of_tors(u)) for u in lat.enumerate_tors()]
    for _ in range(100):
        inner = rng.choice(inners)
        family = rng.sample(inner, rng.randint(1, len(inner)))
        assert core.ice_join(family) in inner
        assert core.ice_meet(family) in inner


def test_wide_interval_poset_isomorphism(run):
    core, lat = run.core, run.lat
    for u in lat.enumerate_tors():
        plus = lat.u_plus(u)
        w = core.wide_of_tors(u)
        above = [t for t in lat.enumerate_tors() if subset(u, t) and subset(t, plus)]
        image = [core.heart(u, t) for t in above]
        assert sorted(image) == sorted(lat.tors_in(w))
        for a, b in combinations(range(len(above)), 2):
            assert subset(above[a], above[b]) == subset(image[a], image[b])
            if subset(above[a], above[b]):
                # hearts of subintervals are preserved
                sub = core.heart(above[a], above[b])
                assert sub == image[b] & lat.perp_right(image[a]) & w


def test_jobs_do_not_change_results():
    serial = IceCore(SubcatLattice(build_table(load_fixture("nak"))))
    threaded = IceCore(SubcatLattice(build_table(load_fixture("nak")), jobs=4))
    assert serial.enumerate_ice() == threaded.enumerate_ice()
    assert serial.lat.enumerate_tors() == threaded.lat.enumerate_tors()
