import json

import pytest
from gmpy2 import mpq

from semiclassical.eulerchar import gamma0_series
from semiclassical.genus1 import b1, trivial_module
from semiclassical.graphoracle import (
    StableGraph,
    aut_order,
    aut_order_bruteforce,
    enumerate_graphs,
    m_polynomial,
    orbit_count,
    perm_character,
)
from semiclassical.mpoly import v
from semiclassical.symf import SymFunc, rk, to_schur


def test_small_enumerations():
    assert len(enumerate_graphs(0, 3)) == 1
    assert len(enumerate_graphs(1, 2, genus0_only=True)) == 3
    assert len(enumerate_graphs(1, 4, genus0_only=True)) == 111


def test_two_leg_shapes():
    shapes = {(G.genera, G.edges) for G in enumerate_graphs(1, 2, genus0_only=True)}
    assert shapes == {((0,), ((0, 0),)), ((0, 0), ((0, 1), (0, 1))), ((0, 0), ((0, 0), (0, 1)))}


def test_rejects_unstable_and_higher_genus():
    with pytest.raises(ValueError):
        enumerate_graphs(0, 2)
    with pytest.raises(ValueError):
        enumerate_graphs(2, 1)


def test_graphs_are_stable_and_have_right_genus():
    for G in enumerate_graphs(1, 4):
        assert G.is_stable() and G.genus() == 1 and G.n == 4


def test_aut_examples():
    assert aut_order(StableGraph((0,), ((0, 0),), (0,))) == 2
    assert aut_order(StableGraph((1,), (), (0, 0, 0))) == 1
    assert aut_order(StableGraph((0, 0), ((0, 1), (0, 1)), (0, 1))) == 2


@pytest.mark.parametrize("g,n", [(0, 5), (1, 1), (1, 2), (1, 3)])
def test_aut_matches_bruteforce(g, n):
    for G in enumerate_graphs(g, n):
        assert aut_order(G) == aut_order_bruteforce(G)


def test_m_polynomial_examples():
    assert m_polynomial(0, 4) == v(0, 4) + v(0, 3) * v(0, 3) * 3
    assert m_polynomial(0, 5) == v(0, 5) + v(0, 4) * v(0, 3) * 10 + v(0, 3) * v(0, 3) * v(0, 3) * 15
    assert m_polynomial(1, 1) == v(1, 1) + v(0, 3) * mpq(1, 2)


def test_m_polynomial_at_ones_is_mass():
    for n in range(3, 7):
        mass = sum(mpq(1, aut_order(G)) for G in enumerate_graphs(0, n))
        assert m_polynomial(0, n).evaluate(lambda g, k: 1) == mass


def test_perm_character_examples():
    assert perm_character(1) == SymFunc.p(1, 1)
    assert to_schur(perm_character(2)) == {2: {(2,): 3}}
    assert to_schur(perm_character(3)) == {3: {(3,): 7, (2, 1): 4}}


def test_perm_character_matches_b1():
    B = b1(trivial_module(7))
    gam = gamma0_series(5).egf()
    for n in range(1, 6):
        chi = perm_character(n)
        assert chi == B.degree_part(n)
        assert rk(chi).egf()[n] == gam[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_burnside(n):
    assert to_schur(perm_character(n))[n].get((n,), 0) == orbit_count(n)


def test_graph_json():
    G = StableGraph((0, 0), ((0, 1), (1, 1)), (0, 0))
    data = json.loads(json.dumps(G.to_json()))
    assert [v["g"] for v in data["vertices"]] == [0, 0]
    assert data["legs"] == [0, 1]
    assert len(data["involution"]) == 2
    flags = sorted(f for v in data["vertices"] for f in v["flags"])
    assert flags == list(range(6))


def test_labelled_counts_match_generating_function():
    counts = [len(enumerate_graphs(1, n, genus0_only=True)) for n in range(1, 6)]
    assert counts == gamma0_series(5).egf()[1:]
