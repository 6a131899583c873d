import json

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from semiclassical.coeff import Coeff, L
from semiclassical.errors import AdamsOnCuspSymbol, NonzeroConstantTerm
from semiclassical.partitions import partitions
from semiclassical.series import ExpSeries
from semiclassical.symf import SymFunc, adams_sym, basis, d_p1, d_p2, from_schur, log1p, plethysm, rk, to_schur

from strategies import symfuncs

p = SymFunc.p
slow = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def test_products_and_truncation():
    assert p(1, 4) * p(1, 4) == p((1, 1), 4)
    assert p(2, 4) + 0 == p(2, 4)
    assert not (p(2, 2) * p(1, 2))


def test_adams_examples():
    assert adams_sym(2, p(1, 4)) == p(2, 4)
    assert adams_sym(2, p(1, 4) * L) == p(2, 4) * L**2
    assert adams_sym(3, p(1, 6) + p(2, 6)) == p(3, 6) + p(6, 6)
    with pytest.raises(AdamsOnCuspSymbol):
        adams_sym(2, p(1, 4) * Coeff.cusp(12))


def test_plethysm_examples():
    assert plethysm(p(2, 4), p(1, 4) * L) == p(2, 4) * L**2
    f = SymFunc.h(3, 5) * L + p((2, 1), 5)
    assert plethysm(f, p(1, 5)) == f
    got = plethysm(SymFunc.h(2, 4), p(1, 4) + p(2, 4))
    want = (p((1, 1), 4) + p((2, 1), 4) * 2 + p((2, 2), 4) + p(2, 4) + p(4, 4)) * mpq(1, 2)
    assert got == want and got.N == 4


def test_plethysm_rejects_constant_inner():
    with pytest.raises(NonzeroConstantTerm):
        plethysm(p(1, 3), p(1, 3) + 1)


def test_plethysm_leaves_outer_coefficients_alone():
    assert plethysm(p(2, 4) * L, p(1, 4) * L) == p(2, 4) * L**3


def test_derivatives():
    e2 = SymFunc.e(2, 4)
    assert d_p1(e2) == p(1, 3)
    assert d_p2(e2) == SymFunc.constant(mpq(-1, 2), 2)
    assert d_p1(SymFunc.h(3, 4)) == SymFunc.h(2, 3)


def test_log_and_exp():
    assert log1p(SymFunc.zero(4)) == SymFunc.zero(4)
    x = p(1, 3)
    assert log1p(x) == x - x * x * mpq(1, 2) + x * x * x * mpq(1, 3)
    u = p(1, 4) + p(2, 4)
    assert log1p(u.exp() - 1) == u


def test_classical_bases():
    assert SymFunc.h(2, 4) == (p((1, 1), 4) + p(2, 4)) * mpq(1, 2)
    assert SymFunc.e(2, 4) == (p((1, 1), 4) - p(2, 4)) * mpq(1, 2)
    assert SymFunc.s((2, 1), 4) == (p((1, 1, 1), 4) - p(3, 4)) * mpq(1, 3)
    with pytest.raises(ValueError):
        basis("m", 2, 4)
    with pytest.raises(ValueError):
        SymFunc.h(5, 4)


def test_to_schur_examples():
    assert to_schur(SymFunc.h(2, 4)) == {2: {(2,): 1}}
    assert to_schur(p((1, 1), 4)) == {2: {(2,): 1, (1, 1): 1}}


def test_rk_examples():
    assert rk(SymFunc.h(3, 4)) == ExpSeries([0, 0, 0, mpq(1, 6)], 4)
    assert rk(p(2, 4)) == ExpSeries([0], 4)
    assert rk(SymFunc.e(2, 4)) == ExpSeries([0, 0, mpq(1, 2)], 4)


def test_schur_roundtrip_all_shapes():
    for n in range(1, 9):
        for lam in partitions(n):
            assert to_schur(SymFunc.s(lam, 8)) == {n: {lam: 1}}


def test_h_derivative_chain():
    for n in range(1, 9):
        assert d_p1(SymFunc.h(n, 8)) == SymFunc.h(n - 1, 7)


def test_json_roundtrip():
    f = SymFunc.s((2, 1), 5) * (L - Coeff.cusp(12)) + p(4, 5)
    data = json.loads(json.dumps(f.to_json()))
    assert data["N"] == 5
    assert SymFunc.from_json(data) == f


def test_mixed_truncation_takes_minimum():
    assert (p(1, 3) + p(1, 6)).N == 3


@slow
@given(symfuncs(6, density=0.2), symfuncs(6, density=0.2), symfuncs(6, density=0.2))
def test_plethysm_associative(f, g, h):
    assert plethysm(plethysm(f, g), h) == plethysm(f, plethysm(g, h))


@slow
@given(symfuncs(6), symfuncs(6), symfuncs(6, density=0.3))
def test_plethysm_ring_map_in_outer(f1, f2, g):
    assert plethysm(f1 * f2, g) == plethysm(f1, g) * plethysm(f2, g)
    assert plethysm(f1 + f2, g) == plethysm(f1, g) + plethysm(f2, g)


@slow
@given(st.integers(1, 4), symfuncs(8, density=0.2))
def test_power_sum_plethysm_is_adams(m, g):
    assert plethysm(p(m, 8), g) == adams_sym(m, g)


@slow
@given(symfuncs(6, lo=0), symfuncs(6))
def test_rk_intertwines_composition(f, g):
    assert rk(plethysm(f, g)) == rk(f).compose(rk(g))


@slow
@given(symfuncs(7, lo=0))
def test_schur_reassembles(f):
    for n, schur in to_schur(f).items():
        assert from_schur(schur, f.N) == f.degree_part(n)
