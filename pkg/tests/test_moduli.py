import json
from math import factorial

import pytest
from gmpy2 import mpq

from semiclassical.coeff import Coeff, L
from semiclassical.errors import NonExactDivision, WindowOverflow
from semiclassical.moduli import (
    OmegaSeries,
    SerrePolynomial,
    build_A0,
    build_A1,
    euler_specialization,
    h4_m14,
    poincare_check,
    serre_equivariant,
    serre_nonequivariant,
)
from semiclassical.symf import to_schur
from semiclassical.tables import PRINTED_CHI, PRINTED_SERRE, PRINTED_SERRE_EQUIVARIANT, PRINTED_SERRE_N11


def _L_poly(coeffs):
    return Coeff.from_L_poly(coeffs)


def _at(c, e, cusps=()):
    return c.terms().get((e, cusps), 0)


def test_A0_low_degrees():
    A0 = build_A0(6)
    assert A0.min_degree() == 3
    assert to_schur(A0.degree_part(3)) == {3: {(3,): 1}}
    assert A0.is_cusp_free()
    assert all(c.is_polynomial() for c in A0.terms().values())


def test_A0_euler_characteristics():
    # chi(M_{0,n}) = (-1)^(n-3) (n-3)!
    A0 = build_A0(9)
    for n in range(3, 10):
        chi = A0[(1,) * n].evaluate(1) * factorial(n)
        assert chi == (-1) ** (n - 3) * factorial(n - 3)


def test_A1_cusp_free_below_eleven():
    A1 = build_A1(10)
    assert A1.is_cusp_free()
    assert all(c.is_polynomial() for c in A1.terms().values())
    A1 = build_A1(11)
    assert not A1.is_cusp_free()
    assert {w for c in A1.terms().values() for w in c.cusp_weights()} == {12}


def test_A1_euler_characteristics():
    A1 = build_A1(8)
    expected = {1: 1, 2: 1, 3: 0, 4: 0}
    for n in range(1, 9):
        chi = A1[(1,) * n].evaluate(1) * factorial(n)
        want = expected.get(n, mpq((-1) ** n * factorial(n - 1), 12))
        assert chi == want


def test_omega_series_division():
    w = OmegaSeries({1: 1}, window=(-6, 6))
    w_inv = OmegaSeries({-1: 1}, window=(-6, 6))
    one = OmegaSeries({0: 1}, window=(-6, 6))
    g = w * 3 + L - w_inv * w_inv * (L**2)
    f = (one - w) * (one - w_inv * L) * g
    assert f.div_one_minus_omega().div_one_minus_L_over_omega() == g
    assert f.div_one_minus_L_over_omega().div_one_minus_omega() == g


def test_omega_inexact_division():
    with pytest.raises(NonExactDivision):
        OmegaSeries({0: 1, 1: 1}).div_one_minus_omega()
    with pytest.raises(NonExactDivision):
        OmegaSeries({0: 1}).div_one_minus_L_over_omega()


def test_omega_window_overflow():
    w = OmegaSeries({1: 1}, window=(-2, 2))
    with pytest.raises(WindowOverflow):
        w * w * w


@pytest.mark.parametrize("n", range(1, 6))
def test_equivariant_table(n):
    P = serre_equivariant(n, 5)
    want = {lam: _L_poly(cs) for lam, cs in PRINTED_SERRE_EQUIVARIANT[n].items()}
    assert P.schur() == want


def test_equivariant_n5_has_shared_row():
    P = serre_equivariant(5, 5)
    assert P.schur()[(3, 1, 1)] == P.schur()[(2, 2, 1)] == L**3 + L**2


def test_positivity():
    for n in range(1, 6):
        P = serre_equivariant(n, 5)
        for e in P.L_exponents():
            for q in P.coefficient(e).values():
                assert q >= 0 and q == int(q)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 10])
def test_nonequivariant_table(n):
    assert serre_nonequivariant(n, 11) == _L_poly(PRINTED_SERRE[n])


def test_n7_linear_coefficient_is_dual_to_L6():
    c = serre_nonequivariant(7, 11)
    printed = PRINTED_SERRE[7]
    assert _at(c, 1) == 121 == printed[6]
    assert printed[1] == 12
    assert c == _L_poly([1, 121] + printed[2:])


def test_n11_row():
    c = serre_nonequivariant(11, 11)
    for e, q in PRINTED_SERRE_N11["L"].items():
        if e != 5:
            assert _at(c, e) == q
    assert _at(c, 5) == _at(c, 6) == 74269967
    assert c.cusp_parts()[(12,)] == -1


def test_poincare_duality():
    for n in range(1, 12):
        assert poincare_check(serre_equivariant(n, 11))


def test_poincare_check_detects_asymmetry():
    P = serre_equivariant(3, 5)
    broken = SerrePolynomial(3, {**P.by_L, 0: ({(3,): mpq(2)}, {})})
    assert not poincare_check(broken)


def test_h4():
    assert h4_m14() == {(4,): 7, (3, 1): 4, (2, 2): 2}
    P = serre_equivariant(4, 5)
    assert P.coefficient(0) == P.coefficient(4) == {(4,): 1}


def test_euler_specialization():
    for n, chi in enumerate(PRINTED_CHI, start=1):
        assert euler_specialization(serre_nonequivariant(n, 11)) == chi
    assert euler_specialization(L - Coeff.cusp(12)) == -1


def test_serre_json_roundtrip():
    P = serre_equivariant(11, 11)
    data = json.loads(json.dumps(P.to_json()))
    assert data["n"] == 11 and [r["Lexp"] for r in data["by_L"]] == sorted(r["Lexp"] for r in data["by_L"])
    assert SerrePolynomial.from_json(data) == P
    assert any(row["cusp"] for row in data["by_L"])


def test_weight_sixteen_appears_at_fifteen():
    c = serre_nonequivariant(15, 15)
    assert 16 in c.cusp_weights()
    assert poincare_check(serre_equivariant(15, 15))
