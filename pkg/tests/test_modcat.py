import json
import warnings

import numpy as np
import pytest

from icetilt.algebra import load_fixture
from icetilt.errors import IncompleteBound, IncompleteTable, UnknownSummand
from icetilt import modcat
from icetilt.modcat import (
    build_table, decompose, enumerate_submodules, ext1_dim, ext_middle_terms, hom_basis,
    is_isomorphic, minimal_left_approximation, trace,
)
from icetilt.representation import Representation, direct_sum, is_injective, is_surjective


@pytest.fixture(scope="module")
def a2():
    return build_table(load_fixture("a2"))


@pytest.fixture(scope="module")
def nak():
    return build_table(load_fixture("nak"))


def test_hom_dims_a2():
    alg = load_fixture("a2")
    s1, p2 = alg.simple_of("1"), alg.projective_of("2")
    assert len(hom_basis(s1, p2)) == 1
    assert len(hom_basis(p2, s1)) == 0
    assert len(hom_basis(p2, p2)) == 1


def test_isomorphism_examples():
    alg = load_fixture("a2")
    p2 = alg.projective_of("2")
    assert is_isomorphic(p2, p2)
    assert not is_isomorphic(alg.simple(0), alg.simple(1))
    # base change of 2/1 at vertex 2 only (over F_3 scale by 2)
    alg3 = load_fixture("a2", field=3)
    q = alg3.projective_of("2")
    conj = Representation(alg3, q.dims, [(q.maps[0] * 2) % 3])
    assert is_isomorphic(q, conj)
    split = direct_sum([alg3.simple(0), alg3.simple(1)])[0]
    assert not is_isomorphic(q, split)


def test_submodule_examples():
    alg = load_fixture("a2")
    assert len(enumerate_submodules(alg.projective_of("2"))) == 3
    assert len(enumerate_submodules(alg.simple(0))) == 2
    s11 = direct_sum([alg.simple(0), alg.simple(0)])[0]
    assert len(enumerate_submodules(s11)) == 5


def test_decompose_examples(a2):
    alg = a2.algebra
    names = a2.names
    assert names == ["1", "2", "2/1"]
    for k, m in enumerate(a2.indecs):
        assert decompose(a2, m) == (k,)
    s1 = alg.simple_of("1")
    total = direct_sum([s1, alg.projective_of("2")])[0]
    assert a2.expr_name(decompose(a2, total)) == "1⊕2/1"
    mids = ext_middle_terms(a2, s1, alg.simple_of("2"))
    assert {a2.expr_name(e) for e in mids} == {"2/1", "1⊕2"}


def test_unknown_summand():
    alg = load_fixture("a3")
    partial = build_table(alg, dim_bound=1)
    # only the simples: the submodule table of nothing else can be filled
    with pytest.raises(UnknownSummand):
        modcat.IndecTable.from_modules(alg, partial.indecs[:3] + [alg.projective(2)])


def test_indecomposable_counts():
    assert len(build_table(load_fixture("a2"), dim_bound=1).indecs) == 3
    a3 = build_table(load_fixture("a3"), dim_bound=1)
    assert sorted(a3.names) == sorted(["1", "2", "3", "2/1", "3/2", "3/2/1"])
    nak = build_table(load_fixture("nak"))
    assert sorted(nak.names) == sorted(["1", "2", "3", "2/1", "3/2"])
    nonnak = build_table(load_fixture("nonnak"), dim_bound=2)
    assert sorted(nonnak.names) == sorted(["1", "2", "3", "1/2", "2/3", "3/3", "23/3"])
    assert nonnak.dim_vectors[nonnak.index("23/3")] == (0, 1, 2)


@pytest.mark.parametrize("name,d", [("a2", 1), ("a3", 1), ("nak", 1), ("a2", 2)])
def test_generation_agrees_with_bruteforce(name, d):
    alg = load_fixture(name)
    generated = build_table(alg, dim_bound=d)
    brute = modcat.enumerate_indecomposables_bruteforce(alg, d)
    assert len(brute) == len(generated.indecs)
    for m in brute:
        assert sum(is_isomorphic(m, x) for x in generated.indecs) == 1


def test_incomplete_bound_warns():
    with pytest.warns(IncompleteBound), pytest.raises(IncompleteTable):
        build_table(load_fixture("nonnak"), dim_bound=1)
    with pytest.warns(IncompleteBound):
        modules, complete = modcat.enumerate_indecomposables(load_fixture("nonnak"), 1)
    assert not complete and len(modules) == 5


def test_default_bound_is_complete():
    with warnings.catch_warnings():
        warnings.simplefilter("error", IncompleteBound)
        table = build_table(load_fixture("nonnak"))
    assert table.complete and len(table.indecs) == 7


def test_ext_examples(a2):
    alg = a2.algebra
    s1, s2 = alg.simple_of("1"), alg.simple_of("2")
    assert ext1_dim(s2, s1) == 1
    assert ext1_dim(s1, s2) == 0
    for v in range(2):
        for m in a2.indecs:
            assert ext1_dim(alg.projective(v), m) == 0


@pytest.mark.parametrize("name", ["a2", "a3", "nak", "nonnak"])
def test_ext_long_exact_sequence_and_split(name):
    table = build_table(load_fixture(name))
    alg = table.algebra
    for i, n_mod in enumerate(table.indecs):
        cover, pi = alg.projective_cover(n_mod)
        omega = modcat.kernel(pi, cover)[0]
        for j, l_mod in enumerate(table.indecs):
            expect = (len(hom_basis(omega, l_mod)) - len(hom_basis(cover, l_mod))
                      + len(hom_basis(n_mod, l_mod)))
            assert table.ext_dim[i, j] == expect
            split = tuple(sorted((i, j)))
            assert split in table.ext_mid[i, j]
            assert (table.ext_mid[i, j] == {split}) == (table.ext_dim[i, j] == 0)
            assert ((), (i,)) in table.sub_quot[i] and ((i,), ()) in table.sub_quot[i]


@pytest.mark.parametrize("name", ["a2", "nak"])
def test_ext_middle_terms_match_injection_oracle(name):
    table = build_table(load_fixture(name))
    for i in range(len(table.indecs)):
        for j in range(len(table.indecs)):
            assert table.ext_mid[i, j] == modcat.middle_terms_by_injection(table, j, i)


def test_nak_ext_example(nak):
    two, three_two = nak.index("2"), nak.index("3/2")
    assert nak.ext_dim[three_two, two] == 0
    assert nak.ext_mid[three_two, two] == {tuple(sorted((two, three_two)))}


def test_trace_examples(nak):
    u = [nak.index("3/2"), nak.index("3")]
    m = nak.indecs[nak.index("3/2")]
    assert trace(nak, u, m)[0].total_dim == m.total_dim
    assert trace(nak, u, nak.indecs[nak.index("2")])[0].total_dim == 0
    assert trace(nak, u, nak.indecs[nak.index("2/1")])[0].total_dim == 0
    assert trace(nak, [], m)[0].total_dim == 0


def test_trace_is_idempotent(nak):
    for u_idx in range(5):
        for m in nak.indecs:
            t, _ = trace(nak, [u_idx], m)
            assert trace(nak, [u_idx], t)[0].dims == t.dims


def test_minimal_left_approximation_examples(a2):
    i1, i2, i21 = a2.index("1"), a2.index("2"), a2.index("2/1")
    x = a2.indecs[i21]
    target, f, rep = minimal_left_approximation(a2, x, [i2])
    assert target == (i2,) and is_surjective(f, rep)
    target, f, rep = minimal_left_approximation(a2, a2.indecs[i2], [i21])
    assert target == ()
    target, f, rep = minimal_left_approximation(a2, x, [i21, i1])
    assert target == (i21,) and is_injective(f, 2)


def test_override_roundtrip(tmp_path, nak):
    path = tmp_path / "override.json"
    path.write_text(json.dumps(nak.override_dict()))
    again = modcat.load_override(nak.algebra, path.read_text())
    assert again.names == nak.names
    assert np.array_equal(again.hom_dim, nak.hom_dim)
    dup = nak.override_dict()
    dup["modules"].append(dup["modules"][0])
    with pytest.raises(ValueError):
        modcat.load_override(nak.algebra, json.dumps(dup))
    bad = nak.override_dict()
    bad["modules"].append({"dims": {"1": 2, "2": 0, "3": 0}, "maps": {}})
    with pytest.raises(ValueError):
        modcat.load_override(nak.algebra, json.dumps(bad))


def test_decompose_conserves_dimension(nak):
    alg = nak.algebra
    mods = [alg.projective(v) for v in range(3)] + list(nak.indecs)
    total = direct_sum(mods)[0]
    expr = decompose(nak, total)
    dims = np.sum([nak.dim_vectors[k] for k in expr], axis=0)
    assert tuple(dims) == total.dims
    small = direct_sum([alg.simple(0), alg.projective(2)])[0]
    resummed = direct_sum([nak.indecs[k] for k in decompose(nak, small)])[0]
    assert is_isomorphic(resummed, small)
