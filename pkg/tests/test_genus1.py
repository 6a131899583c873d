from math import factorial

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, given, settings

from semiclassical import genus1, verify
from semiclassical.coeff import L
from semiclassical.genus1 import (
    GenusData,
    b0,
    b1,
    b1_alt_check,
    b_scalar,
    cyclic_cycle_index,
    mv_symbolic,
    necklace_characteristic,
    necklace_term,
    trivial_module,
)
from semiclassical.graphoracle import m_polynomial
from semiclassical.mpoly import v
from semiclassical.series import ExpSeries
from semiclassical.symf import SymFunc, d_p2, rk, to_schur
from semiclassical.tables import PRINTED_TRIVIAL_EXAMPLE, printed_mv

from strategies import symfuncs

slow = settings(max_examples=15, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@pytest.fixture(scope="module")
def trivial_b1():
    return b1(trivial_module(7))


def test_b0_examples():
    assert not b0(GenusData(SymFunc.zero(6), SymFunc.zero(4)))
    B = b0(trivial_module(6))
    assert to_schur(B.degree_part(3)) == {3: {(3,): 1}}
    assert rk(B).egf()[5] == 26


def test_necklace_examples():
    assert not necklace_term(SymFunc.zero(6))
    data = trivial_module(6)
    # the count 3 needs the composition with h1 + b0'; the bare term gives 2
    assert rk(necklace_term(data.A0)).egf()[2] == 2
    assert rk(b1(data)).egf()[2] == 3
    h3 = SymFunc.h(3, 5)
    assert necklace_term(h3).degree_part(1) == SymFunc.p(1, 3)


def test_b1_with_no_genus_zero_vertices_is_A1():
    A1 = SymFunc.h(2, 4) * L + SymFunc.p(1, 4)
    assert b1(GenusData(SymFunc.zero(6), A1)) == A1


def test_trivial_module_table(trivial_b1):
    for n, expected in PRINTED_TRIVIAL_EXAMPLE.items():
        assert to_schur(trivial_b1.degree_part(n)) == {n: expected}


def test_trivial_module_degree_four_and_five(trivial_b1):
    assert to_schur(trivial_b1.degree_part(4))[4] == {(4,): 20, (3, 1): 17, (2, 2): 14, (2, 1, 1): 4}
    assert to_schur(trivial_b1.degree_part(5))[5] == {
        (5,): 52,
        (4, 1): 78,
        (3, 2): 71,
        (3, 1, 1): 33,
        (2, 2, 1): 34,
        (2, 1, 1, 1): 4,
        (1, 1, 1, 1, 1): 1,
    }


def test_trivial_module_dimensions(trivial_b1):
    assert rk(trivial_b1).egf()[1:6] == [1, 3, 15, 111, 1104]


def test_quarter_term_is_needed():
    bad = b1(trivial_module(4), quarter_term=False)
    assert to_schur(bad.degree_part(2)) == {2: {(2,): mpq(11, 4), (1, 1): mpq(1, 4)}}


def test_alt_check():
    assert b1_alt_check(trivial_module(7))
    assert b1_alt_check(GenusData(SymFunc.zero(6), SymFunc.zero(4)))
    data = trivial_module(6)
    assert not b1_alt_check(data, b1(data) + SymFunc.p(3, 4))


@slow
@given(symfuncs(6, lo=3, hi=5, density=0.3), symfuncs(4, density=0.3))
def test_alt_check_random(A0, A1):
    assert b1_alt_check(GenusData(A0, A1))


@slow
@given(symfuncs(7, lo=3, density=0.3, use_L=False), symfuncs(5, density=0.3, use_L=False))
def test_rank_consistency(A0, A1):
    data = GenusData(A0, A1)
    adot = rk(d_p2(A0))
    B0, B1 = b_scalar(rk(A0), rk(A1), adot.truncate(5))
    assert rk(b0(data)) == B0
    assert rk(b1(data)) == B1


def test_genus_data_validation():
    with pytest.raises(ValueError):
        GenusData(SymFunc.h(2, 5), SymFunc.zero(3))
    with pytest.raises(ValueError):
        GenusData(SymFunc.h(3, 5), SymFunc.one(3))


def test_necklace_characteristic_is_cycle_index():
    nk = necklace_characteristic(8)
    assert nk.degree_part(1) == SymFunc.p(1, 8)
    assert nk.degree_part(2) == SymFunc.h(2, 8)
    for n in range(1, 9):
        part = nk.degree_part(n)
        assert part == cyclic_cycle_index(n, 8)
        schur = to_schur(part)[n]
        assert all(c.is_polynomial() and c == int(c.constant()) and c.constant() >= 0 for c in schur.values())


def test_scalar_zero_inputs():
    zero = ExpSeries([0], 5)
    B0, B1 = b_scalar(zero, zero)
    assert not any(B0.c) and not any(B1.c)


@pytest.fixture(scope="module")
def mv():
    return mv_symbolic(6)


def test_mv_genus_one_one_leg(mv):
    assert mv[(1, 1)] == v(1, 1) + v(0, 3) * mpq(1, 2)


def test_mv_genus_one_three_legs(mv):
    # the printed row misses the v11 v03^2 chain among others
    printed = printed_mv(1, 3)
    missing = v(0, 4) * v(0, 3) * 2 + v(0, 3) * v(0, 3) * v(0, 3) * 3 + v(1, 1) * v(0, 3) * v(0, 3) * 3
    assert mv[(1, 3)] == printed + missing


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (0, 5), (0, 6), (1, 1), (1, 2), (1, 3), (1, 4)])
def test_mv_matches_oracle(mv, g, n):
    assert mv[(g, n)] == m_polynomial(g, n)


def test_mv_genus_one_two_legs(mv):
    assert mv[(1, 2)] == v(1, 2) + v(1, 1) * v(0, 3) + v(0, 4) * mpq(1, 2) + v(0, 3) * v(0, 3)


def test_sign_flip_in_necklace_breaks_table(monkeypatch):
    original = genus1.necklace_term
    monkeypatch.setattr(genus1, "necklace_term", lambda A0, quarter_term=True: -original(A0, quarter_term))
    assert not verify.run_criterion(3).ok


def test_dropping_quarter_term_breaks_table(monkeypatch):
    original = genus1.necklace_term
    monkeypatch.setattr(genus1, "necklace_term", lambda A0, quarter_term=True: original(A0, False))
    assert not verify.run_criterion(3).ok


def test_dimension_counts_without_leading_factorials(trivial_b1):
    for n in range(1, 6):
        assert trivial_b1[(1,) * n] * factorial(n) == [1, 3, 15, 111, 1104][n - 1]
