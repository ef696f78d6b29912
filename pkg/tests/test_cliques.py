import json

import pytest
from hypothesis import given, settings

from toeplitz import cliques, oracle
from toeplitz.cliques import CliqueCover
from toeplitz.core import PreconditionError, ToeplitzError, is_arithmetic, new_spec, parse_spec, to_dense

from conftest import arithmetic_specs, specs


def test_kq_free_examples():
    fig = parse_spec("5: 1,2,4")
    assert cliques.is_kq_free(fig, 4)
    assert not cliques.is_kq_free(fig, 3)
    arith = parse_spec("10: 2,4,6")
    assert cliques.is_kq_free(arith, 5)
    assert not cliques.is_kq_free(arith, 4)
    assert cliques.is_kq_free(parse_spec("4: 1"), 3)
    with pytest.raises(ToeplitzError):
        cliques.is_kq_free(fig, 2)


def test_triangle_free_examples():
    assert cliques.is_triangle_free(parse_spec("8: 2,3"))
    assert not cliques.is_triangle_free(parse_spec("5: 1,2,4"))
    assert cliques.is_triangle_free(parse_spec("9: 4"))


def test_clique_number_examples():
    assert cliques.clique_number(parse_spec("10: 2,4,6")) == 4
    assert cliques.clique_number(parse_spec("5: 1,2,4")) == 3
    assert cliques.clique_number(parse_spec("8: 2,3")) == 2
    assert cliques.clique_number(parse_spec("4:")) == 1
    assert cliques.maximum_clique(parse_spec("5: 1,2,4")) == (1, 2, 3)


def test_edge_cover_number_examples():
    assert cliques.edge_clique_cover_number_arith(parse_spec("7: 2,4")) == 3
    assert cliques.edge_clique_cover_number_arith(parse_spec("6: 2,4")) == 2
    assert cliques.edge_clique_cover_number_arith(parse_spec("12: 3,6")) == 6
    with pytest.raises(PreconditionError):
        cliques.edge_clique_cover_number_arith(parse_spec("5: 1,2,4"))


def test_edge_cover_small_n_single_offset():
    # G_5<3> is the matching {1-4, 2-5}: two cliques, not max(t, n - t) = 3
    spec = parse_spec("5: 3")
    assert cliques.edge_clique_cover_number_arith(spec) == 2
    assert oracle.edge_clique_cover_number(to_dense(spec)) == 2
    assert cliques.edge_clique_cover_arith(spec).cliques == ((1, 4), (2, 5))


def test_edge_cover_examples():
    assert cliques.edge_clique_cover_arith(parse_spec("7: 2,4")).cliques == ((1, 3, 5), (2, 4, 6), (3, 5, 7))
    assert cliques.edge_clique_cover_arith(parse_spec("6: 2,4")).cliques == ((1, 3, 5), (2, 4, 6))
    assert cliques.edge_clique_cover_arith(parse_spec("5: 1,2")).cliques == ((1, 2, 3), (2, 3, 4), (3, 4, 5))


def test_vertex_cover_number_examples():
    assert cliques.vertex_clique_cover_number_arith(parse_spec("9: 2,4")) == 4
    assert cliques.vertex_clique_cover_number_arith(parse_spec("10: 3")) == 6
    assert cliques.vertex_clique_cover_number_arith(parse_spec("7: 1,2")) == 3


def test_vertex_cover_number_preconditions():
    with pytest.raises(PreconditionError, match="not of the form"):
        cliques.vertex_clique_cover_number_arith(parse_spec("8: 2,3"))
    with pytest.raises(PreconditionError, match="needs n >"):
        cliques.vertex_clique_cover_number_arith(parse_spec("6: 2,4"))


def test_vertex_cover_examples():
    assert cliques.vertex_clique_cover_arith(parse_spec("7: 1,2")).cliques == ((1, 2, 3), (4, 5, 6), (7,))
    assert cliques.vertex_clique_cover_arith(parse_spec("9: 2,4")).cliques == ((1, 3, 5), (7, 9), (2, 4, 6), (8,))
    assert cliques.vertex_clique_cover_arith(parse_spec("3: 1")).cliques == ((1, 2), (3,))
    below = cliques.vertex_clique_cover_arith(parse_spec("6: 2,4"))
    assert below.bound_only


def test_cover_json():
    cover = cliques.edge_clique_cover_arith(parse_spec("7: 2,4"))
    assert cover.to_json() == '{"kind":"edge","cliques":[[1,3,5],[2,4,6],[3,5,7]]}'
    assert CliqueCover.from_dict(json.loads(cover.to_json())) == cover
    bound = cliques.vertex_clique_cover_arith(parse_spec("6: 2,4"))
    assert CliqueCover.from_dict(bound.to_dict()) == bound
    with pytest.raises(ToeplitzError):
        CliqueCover.from_dict({"kind": "both", "cliques": []})


def test_cover_validation_rejects_bad_covers():
    spec = parse_spec("7: 2,4")
    with pytest.raises(ToeplitzError, match="not a clique"):
        CliqueCover("edge", ((1, 2),)).validate(spec)
    with pytest.raises(ToeplitzError, match="not covered"):
        CliqueCover("edge", ((1, 3, 5),)).validate(spec)
    with pytest.raises(ToeplitzError, match="vertices not covered"):
        CliqueCover("vertex", ((1, 3, 5),)).validate(spec)


def test_monotone_witness():
    assert cliques.theta_e_lower_bound_witness(parse_spec("10: 2,4,6")) == 4
    assert cliques.theta_e_lower_bound_witness(parse_spec("10: 2,3,6")) == 4
    assert cliques.theta_e_lower_bound_witness(parse_spec("10: 2,5")) is None


@settings(max_examples=200, deadline=None)
@given(specs(max_n=12))
def test_clique_number_against_oracle(spec):
    omega = oracle.clique_number(to_dense(spec))
    assert cliques.clique_number(spec) == omega
    assert omega <= spec.k + 1
    assert (omega == spec.k + 1) == (is_arithmetic(spec) is not None)
    for q in range(3, spec.k + 3):
        assert cliques.is_kq_free(spec, q) == (omega < q)
    clique = cliques.maximum_clique(spec)
    assert len(clique) == omega and to_dense(spec).is_clique(clique)


@settings(max_examples=100, deadline=None)
@given(arithmetic_specs(max_n=12))
def test_covers_against_oracle(spec):
    g = to_dense(spec)
    cover = cliques.edge_clique_cover_arith(spec)
    cover.validate(spec)
    assert len(cover) == cliques.edge_clique_cover_number_arith(spec) == oracle.edge_clique_cover_number(g)
    vcover = cliques.vertex_clique_cover_arith(spec)
    vcover.validate(spec)
    if spec.n > cliques.vertex_clique_cover_threshold(spec):
        assert not vcover.bound_only
        assert len(vcover) == cliques.vertex_clique_cover_number_arith(spec) == oracle.vertex_clique_cover_number(g)
    else:
        assert len(vcover) >= oracle.vertex_clique_cover_number(g)


def test_formula_matches_theorem_form_when_n_at_least_2t():
    for n in range(2, 20):
        for t in range(1, n):
            for k in range(1, (n - 1) // t + 1):
                spec = new_spec(n, [t * i for i in range(1, k + 1)])
                value = cliques.edge_clique_cover_number_arith(spec)
                if n >= 2 * t:
                    assert value == max(t, n - k * t)
