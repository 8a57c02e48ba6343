import json

import numpy as np
import pytest

from icetilt import algebra
from icetilt.algebra import parse_algebra, load_fixture
from icetilt.errors import NonAdmissible, NonComposablePath, NotFiniteDimensional, SchemaError
from icetilt.representation import is_morphism, is_surjective, kernel


def test_a2_path_basis():
    a2 = load_fixture("a2")
    assert a2.dim == 3
    assert a2.projective_of("2").dim_vector == (1, 1)
    assert a2.projective_of("1").dim_vector == (1, 0)
    p2 = a2.projective_of("2")
    assert int(np.count_nonzero(p2.maps[0])) == 1


def test_nak_dims():
    nak = load_fixture("nak")
    assert nak.dim == 5
    assert nak.projective_of("3").dim_vector == (0, 1, 1)
    assert nak.projective_of("2").dim_vector == (1, 1, 0)


def test_nonnak_dims():
    alg = load_fixture("nonnak")
    assert alg.dim == 6
    assert alg.projective_of("1").dim_vector == (1, 1, 0)
    assert alg.projective_of("2").dim_vector == (0, 1, 1)
    p3 = alg.projective_of("3")
    assert p3.dim_vector == (0, 0, 2)


@pytest.mark.parametrize("name", ["a2", "a3", "nak", "nonnak"])
def test_projectives_and_simples_satisfy_relations(name):
    alg = load_fixture(name)
    for v in range(alg.quiver.n):
        assert alg.projective(v).relations_hold()
        s = alg.simple(v)
        assert s.dim_vector == tuple(int(i == v) for i in range(alg.quiver.n))
        assert all(not m.any() for m in s.maps)


@pytest.mark.parametrize("name", ["a2", "a3", "nak", "nonnak"])
def test_dimension_is_sum_of_projectives(name):
    alg = load_fixture(name)
    assert alg.dim == sum(alg.projective(v).total_dim for v in range(alg.quiver.n))


def test_projective_cover_examples():
    a2 = load_fixture("a2")
    p2 = a2.projective_of("2")
    cover, pi = a2.projective_cover(p2)
    assert cover.dim_vector == (1, 1) and is_surjective(pi, p2)
    s1 = a2.simple_of("1")
    cover, pi = a2.projective_cover(s1)
    assert cover.dim_vector == (1, 0)
    assert kernel(pi, cover)[0].total_dim == 0
    s2 = a2.simple_of("2")
    cover, pi = a2.projective_cover(s2)
    assert cover.dim_vector == (1, 1)
    assert is_morphism(pi, cover, s2)
    assert kernel(pi, cover)[0].dim_vector == (1, 0)


def base_spec(**kw):
    spec = {
        "field": 2,
        "vertices": ["1", "2", "3"],
        "arrows": [{"name": "b", "from": "2", "to": "1"}, {"name": "a", "from": "3", "to": "2"}],
        "relations": [],
    }
    spec.update(kw)
    return spec


def test_schema_errors():
    with pytest.raises(SchemaError):
        parse_algebra({"vertices": ["1"]})
    with pytest.raises(SchemaError):
        parse_algebra(base_spec(vertices=["1", "1", "3"]))
    with pytest.raises(SchemaError):
        parse_algebra(base_spec(field=4))
    with pytest.raises(SchemaError):
        parse_algebra("{not json")
    with pytest.raises(NonComposablePath):
        parse_algebra(base_spec(relations=[[{"coeff": 1, "path": ["b", "a"]}]]))
    with pytest.raises(NonAdmissible):
        parse_algebra(base_spec(relations=[[{"coeff": 1, "path": ["b"]}]]))


def test_loop_without_relation_is_infinite():
    spec = {"field": 2, "vertices": ["1"], "arrows": [{"name": "x", "from": "1", "to": "1"}], "relations": []}
    with pytest.raises(NotFiniteDimensional):
        parse_algebra(spec)
    spec["relations"] = [[{"coeff": 1, "path": ["x", "x", "x"]}]]
    assert parse_algebra(spec).dim == 3


def test_commutativity_relation():
    # square 1->2->4, 1->3->4 with commutativity: paths from 1 to 4 span one class
    spec = {
        "field": 3,
        "vertices": ["1", "2", "3", "4"],
        "arrows": [
            {"name": "a", "from": "1", "to": "2"},
            {"name": "b", "from": "2", "to": "4"},
            {"name": "c", "from": "1", "to": "3"},
            {"name": "d", "from": "3", "to": "4"},
        ],
        "relations": [[{"coeff": 1, "path": ["a", "b"]}, {"coeff": -1, "path": ["c", "d"]}]],
    }
    alg = parse_algebra(spec)
    assert alg.projective_of("1").dim_vector == (1, 1, 1, 1)
    assert alg.projective_of("1").relations_hold()
    assert alg.dim == 4 + 2 + 2 + 1


def test_field_override_and_json_text():
    text = json.dumps(base_spec())
    alg = parse_algebra(text, field=3)
    assert alg.p == 3
    assert algebra.is_acyclic(alg.quiver)
