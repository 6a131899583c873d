"""Hypothesis strategies shared by the property tests."""
from gmpy2 import mpq
from hypothesis import strategies as st

from semiclassical.coeff import Coeff
from semiclassical.partitions import partitions
from semiclassical.symf import SymFunc


@st.composite
def small_q(draw):
    return mpq(draw(st.integers(-4, 4)), draw(st.integers(1, 3)))


@st.composite
def l_poly(draw, max_deg=2):
    """A small polynomial in L with rational coefficients."""
    return Coeff.from_terms({(e, ()): draw(small_q()) for e in range(draw(st.integers(0, max_deg)) + 1)})


@st.composite
def symfuncs(draw, N, lo=1, hi=None, density=0.35, use_L=True):
    """Sparse cusp-free symmetric function with terms in degrees ``lo..hi``."""
    hi = N if hi is None else hi
    terms = {}
    for n in range(lo, hi + 1):
        for mu in partitions(n):
            if draw(st.floats(0, 1)) < density:
                terms[mu] = draw(l_poly()) if use_L else draw(small_q())
    return SymFunc(terms, N)
