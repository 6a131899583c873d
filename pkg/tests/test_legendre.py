import random
from math import factorial

import pytest
from gmpy2 import mpq
from hypothesis import HealthCheck, given, settings

from semiclassical.coeff import L
from semiclassical.errors import NotInLambdaStar, WrongLeadingTerm
from semiclassical.legendre import in_lambda_star, legendre_scalar, legendre_sym
from semiclassical.mpoly import MPolynomial, v
from semiclassical.series import ExpSeries
from semiclassical.symf import SymFunc, d_p1, plethysm, rk, to_schur
from semiclassical.verify import legendre_properties, random_lambda_star

from strategies import symfuncs

slow = settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
HALF_X2 = ExpSeries([0, 0, mpq(1, 2)], 8)


def _symbolic_a0(N):
    zero = MPolynomial()
    return ExpSeries([zero] * 3 + [v(0, n) * mpq(1, factorial(n)) for n in range(3, N + 1)], N)


def test_scalar_fixed_point():
    assert legendre_scalar(HALF_X2) == HALF_X2


def test_scalar_symbolic_rows():
    g = legendre_scalar(ExpSeries([0, 0, mpq(1, 2)], 6) - _symbolic_a0(6))
    eg = g.egf()
    assert eg[4] == v(0, 4) + v(0, 3) * v(0, 3) * 3
    assert eg[6] == v(0, 6) + v(0, 5) * v(0, 3) * 15 + v(0, 4) * v(0, 4) * 10 + v(0, 4) * v(0, 3) * v(0, 3) * 105 + v(0, 3) * v(0, 3) * v(0, 3) * v(0, 3) * 105


def test_scalar_rejects_bad_leading_term():
    with pytest.raises(WrongLeadingTerm):
        legendre_scalar(ExpSeries([0, 0, 1], 4))


def test_sym_basic():
    assert legendre_sym(SymFunc.e(2, 6)) == SymFunc.h(2, 6)
    assert legendre_sym(SymFunc.h(2, 6)) == SymFunc.e(2, 6)


def test_sym_rejects_outside_lambda_star():
    assert not in_lambda_star(SymFunc.h(3, 5))
    with pytest.raises(NotInLambdaStar):
        legendre_sym(SymFunc.h(3, 5))


def test_sym_trivial_tree_level():
    N = 5
    f = SymFunc.e(2, N)
    for n in range(3, N + 1):
        f = f - SymFunc.h(n, N)
    g = legendre_sym(f) - SymFunc.h(2, N)
    assert to_schur(g.degree_part(3)) == {3: {(3,): 1}}
    assert rk(g).egf()[4] == 4
    assert rk(g).egf()[5] == 26


def test_random_examples_from_suite():
    rng = random.Random(1)
    for _ in range(3):
        assert legendre_properties(random_lambda_star(rng, 7)) == (True, True)


def _lambda_star(h):
    return SymFunc.e(2, h.N) + h * L


@slow
@given(symfuncs(7, lo=3, density=0.25))
def test_involution(h):
    f = _lambda_star(h)
    assert legendre_sym(legendre_sym(f)) == f


@slow
@given(symfuncs(7, lo=3, density=0.25))
def test_derivatives_are_inverse(h):
    f = _lambda_star(h)
    g = legendre_sym(f)
    p1 = SymFunc.p(1, 6)
    assert plethysm(d_p1(g), d_p1(f)) == p1
    assert plethysm(d_p1(f), d_p1(g)) == p1


@slow
@given(symfuncs(7, lo=3, density=0.25))
def test_defining_residual_vanishes(h):
    f = _lambda_star(h)
    fp = d_p1(f)
    residual = plethysm(legendre_sym(f), fp) + f - SymFunc.p(1, f.N) * fp
    assert not residual.truncate(fp.N)


@slow
@given(symfuncs(7, lo=3, density=0.25))
def test_rank_shadow(h):
    f = _lambda_star(h)
    assert rk(legendre_sym(f)) == legendre_scalar(rk(f))
