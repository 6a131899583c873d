"""Exact symmetric-function computations for genus 0 and genus 1 graph sums.

Main entry points:

* :class:`Coeff`, :class:`SymFunc`, :class:`ExpSeries` and :func:`plethysm`
  for the underlying algebra;
* :func:`legendre_sym` and :func:`legendre_scalar`;
* :func:`b0`, :func:`b1` and :func:`b_scalar` for the tree and one-loop sums;
* :func:`serre_equivariant` and :func:`serre_nonequivariant` for M-bar_{1,n};
* :func:`chi_series` and :func:`gamma0_series` for Euler characteristics and
  graph counts;
* :mod:`semiclassical.graphoracle` for brute-force graph enumeration.
"""
from .coeff import Coeff, adams_coeff, cusp_dimension, eval_L
from .errors import (
    AdamsOnCuspSymbol,
    DivideByZero,
    NonExactDivision,
    NonUnitLinearTerm,
    NonzeroConstantTerm,
    NotInLambdaStar,
    WindowOverflow,
    WrongLeadingTerm,
)
from .eulerchar import asymptotic_check, chi_series, chi_virtual_series, gamma0_series, solve_g
from .genus1 import (
    GenusData,
    b0,
    b1,
    b1_alt_check,
    b_scalar,
    mv_symbolic,
    necklace_characteristic,
    necklace_term,
    trivial_module,
)
from .legendre import in_lambda_star, invert_series, legendre_scalar, legendre_sym
from .moduli import (
    OmegaSeries,
    SerrePolynomial,
    build_A0,
    build_A1,
    h4_m14,
    poincare_check,
    serre_equivariant,
    serre_nonequivariant,
)
from .mpoly import MPolynomial, v
from .series import ExpSeries
from .symf import SymFunc, adams_sym, basis, d_p1, d_p2, log1p, plethysm, rk, to_schur

__version__ = "0.1.0"
