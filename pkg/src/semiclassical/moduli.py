"""Serre characteristics of M_{0,n}, M_{1,n} and of the compactifications M-bar_{1,n}.

``build_A0`` and ``build_A1`` produce the open-moduli characteristics as
symmetric functions over ``Q[L, 1/L][S12, ...]``.  Both are computed one
power-sum monomial at a time: the coefficient of ``p_mu`` in
``prod_k (1 + p_k)^(a_k)`` is ``prod_k binom(a_k, m_k)`` where ``m_k`` is the
multiplicity of ``k`` in ``mu``.

For ``A1`` the exponents ``a_k`` are Laurent polynomials in ``omega``, every
monomial coefficient is divisible by ``(1 - omega)(1 - L/omega)``, and the
quotient is again a Laurent polynomial, so the residue in ``omega`` is a
finite sum.  The exact quotient coincides with the expansion in which both
``omega`` and ``L/omega`` are small, since that expansion of a polynomial
multiple is the multiple itself.
"""
import json
from functools import lru_cache
from math import factorial

from gmpy2 import mpq

from .coeff import Coeff, cusp_dimension
from .errors import NonExactDivision, WindowOverflow
from .genus1 import GenusData, b1
from .numtheory import divisors, mobius
from .partitions import multiplicities, partitions
from .symf import SymFunc, to_schur

__all__ = [
    "OmegaSeries",
    "SerrePolynomial",
    "build_A0",
    "build_A1",
    "pipeline",
    "serre_equivariant",
    "serre_nonequivariant",
    "poincare_check",
    "h4_m14",
    "euler_specialization",
]

_L = Coeff.L(1)


def _binom(a, m):
    """``a (a-1) ... (a-m+1) / m!`` for a ring element ``a``."""
    out = Coeff(1)
    for i in range(m):
        out = out * (a - i)
    for i in range(2, m + 1):
        out = out * mpq(1, i)
    return out


# -- genus 0 -----------------------------------------------------------------


def _a0_exponent(k):
    acc = Coeff(0)
    for d in divisors(k):
        acc = acc + (1 + _L**d) * mobius(k // d)
    return acc * mpq(1, k)


def build_A0(N):
    """``sum_{n=3}^N Serre^{S_n}(M_{0,n})`` as a symmetric function truncated at ``N``."""
    if N < 3:
        raise ValueError("build_A0 needs N >= 3")
    expo = {k: _a0_exponent(k) for k in range(1, N + 1)}
    den = _L**3 - _L
    terms = {}
    for n in range(1, N + 1):
        for mu in partitions(n):
            c = Coeff(1)
            for k, m in multiplicities(mu).items():
                c = c * _binom(expo[k], m)
            if n < 3:
                # degree 1 cancels against h1/(L^2 - L); degree 2 lies outside the sum
                if mu == (1,) and c != _L + 1:
                    raise NonExactDivision(f"unexpected degree-1 numerator {c}")
                continue
            c = c.divexact(den)
            if not c.is_polynomial():
                raise NonExactDivision(f"A0 coefficient of p_{mu} is not polynomial in L")
            if c:
                terms[mu] = c
    return SymFunc._raw(terms, N)


# -- genus 1 -----------------------------------------------------------------


class OmegaSeries:
    """Laurent polynomial in ``omega`` with :class:`Coeff` coefficients.

    ``window`` bounds the exponents that may occur; an operation leaving it
    raises :class:`WindowOverflow`.
    """

    def __init__(self, coeffs=None, window=(-64, 64)):
        self.window = tuple(window)
        self.c = {}
        for e, v in (coeffs or {}).items():
            v = Coeff(v)
            if v:
                self._check(e)
                self.c[e] = v

    def _check(self, e):
        lo, hi = self.window
        if not lo <= e <= hi:
            raise WindowOverflow(f"omega^{e} outside window [{lo}, {hi}]")

    def __getitem__(self, e):
        return self.c.get(e, Coeff(0))

    def span(self):
        if not self.c:
            return None
        return min(self.c), max(self.c)

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        return isinstance(other, OmegaSeries) and self.c == other.c

    def __add__(self, other):
        if not isinstance(other, OmegaSeries):
            other = OmegaSeries({0: other}, self.window)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, Coeff(0)) + v
        return OmegaSeries(out, self.window)

    def __neg__(self):
        return OmegaSeries({e: -v for e, v in self.c.items()}, self.window)

    def __sub__(self, other):
        return self + (-other if isinstance(other, OmegaSeries) else -Coeff(other))

    def __mul__(self, other):
        if not isinstance(other, OmegaSeries):
            return OmegaSeries({e: v * other for e, v in self.c.items()}, self.window)
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                out[e1 + e2] = out.get(e1 + e2, Coeff(0)) + v1 * v2
        return OmegaSeries(out, self.window)

    __rmul__ = __mul__

    def div_one_minus_omega(self):
        """Exact quotient by ``1 - omega``."""
        if not self.c:
            return self
        lo, hi = self.span()
        out, run = {}, Coeff(0)
        for e in range(lo, hi + 1):
            run = run + self[e]
            out[e] = run
        if run:
            raise NonExactDivision("not divisible by 1 - omega")
        return OmegaSeries(out, self.window)

    def div_one_minus_L_over_omega(self):
        """Exact quotient by ``1 - L/omega``."""
        if not self.c:
            return self
        lo, hi = self.span()
        out, run = {}, Coeff(0)
        for e in range(hi, lo - 1, -1):
            run = self[e] + run * _L
            out[e] = run
        if run:
            raise NonExactDivision("not divisible by 1 - L/omega")
        return OmegaSeries(out, self.window)

    def __repr__(self):
        return "OmegaSeries({" + ", ".join(f"{e}: {v}" for e, v in sorted(self.c.items())) + "})"


def _a1_exponent(k, window):
    acc = OmegaSeries(window=window)
    for d in divisors(k):
        x_d = OmegaSeries({0: 1 + _L**d, d: -1, -d: -(_L**d)}, window)
        acc = acc + x_d * mobius(k // d)
    return acc * mpq(1, k)


def _omega_binom(a, m):
    out = OmegaSeries({0: 1}, a.window)
    for i in range(m):
        out = out * (a - i)
    return out * mpq(1, factorial(m))


def _residue_weights(kmax):
    """Coefficients ``t_k`` of ``omega^(2k)`` in the weight factor of the residue."""
    t = [Coeff(-1)]
    for k in range(1, kmax + 1):
        w = 2 * k + 2
        s = Coeff(1)
        if cusp_dimension(w) > 0:
            s = s + Coeff.cusp(w)
        t.append(s.shift(-(2 * k + 1)))
    return t


def _a1_coefficient(mu, expo, t):
    W = OmegaSeries({0: 1}, expo[1].window)
    for k, m in multiplicities(mu).items():
        W = W * _omega_binom(expo[k], m)
    Q = W.div_one_minus_omega().div_one_minus_L_over_omega()
    # res_0 of Q * sum_k t_k omega^(2k) * (omega - L/omega)
    out = Coeff(0)
    for k, tk in enumerate(t):
        term = Q[-2 - 2 * k] - Q[-2 * k] * _L
        if term:
            out = out + tk * term
    return out


def build_A1(N):
    """``sum_{n=1}^N Serre^{S_n}(M_{1,n})`` as a symmetric function truncated at ``N``."""
    if N < 1:
        raise ValueError("build_A1 needs N >= 1")
    window = (-N - 1, N + 1)
    expo = {k: _a1_exponent(k, window) for k in range(1, N + 1)}
    t = _residue_weights(N // 2 + 1)
    terms = {}
    for n in range(1, N + 1):
        for mu in partitions(n):
            c = _a1_coefficient(mu, expo, t)
            if not c.is_polynomial():
                raise NonExactDivision(f"A1 coefficient of p_{mu} is not polynomial in L: {c}")
            if any(len(cs) > 1 for cs in c.cusp_parts()):
                raise ValueError(f"A1 coefficient of p_{mu} is not linear in cusp symbols")
            if c:
                terms[mu] = c
    return SymFunc._raw(terms, N)


# -- M-bar_{1,n} -------------------------------------------------------------


@lru_cache(maxsize=None)
def pipeline(N):
    """``b1`` for the moduli data, exact through degree ``N``."""
    data = GenusData(build_A0(N + 2), build_A1(N))
    return b1(data)


# truncation orders already computed, so smaller requests reuse them
_orders = set()


class SerrePolynomial:
    """Equivariant Serre polynomial grouped by powers of ``L``.

    ``by_L[e]`` is a pair ``(schur, cusp)`` where ``schur`` maps partitions to
    rational multiplicities and ``cusp`` maps a cusp weight to such a map.
    """

    def __init__(self, n, by_L):
        self.n = n
        self.by_L = {e: (dict(s), {w: dict(m) for w, m in c.items()}) for e, (s, c) in by_L.items()}

    @classmethod
    def from_schur(cls, n, schur):
        by_L = {}
        for lam, coeff in schur.items():
            for (e, cusps), q in coeff.terms().items():
                plain, cusp = by_L.setdefault(e, ({}, {}))
                if not cusps:
                    plain[lam] = q
                elif len(cusps) == 1:
                    cusp.setdefault(cusps[0], {})[lam] = q
                else:
                    raise ValueError("Serre polynomial is not linear in cusp symbols")
        return cls(n, by_L)

    def coefficient(self, e):
        """Cusp-free Schur map of ``L^e``."""
        return dict(self.by_L.get(e, ({}, {}))[0])

    def cusp_coefficient(self, e, weight):
        return dict(self.by_L.get(e, ({}, {}))[1].get(weight, {}))

    def L_exponents(self):
        return sorted(self.by_L)

    def schur(self):
        """Recombine into ``{lambda: Coeff}``."""
        out = {}
        for e, (plain, cusp) in self.by_L.items():
            for lam, q in plain.items():
                out[lam] = out.get(lam, Coeff(0)) + Coeff.L(e) * q
            for w, m in cusp.items():
                for lam, q in m.items():
                    out[lam] = out.get(lam, Coeff(0)) + Coeff.cusp(w).shift(e) * q
        return {lam: c for lam, c in out.items() if c}

    def __eq__(self, other):
        return isinstance(other, SerrePolynomial) and self.n == other.n and self.schur() == other.schur()

    def __str__(self):
        parts = []
        for lam, c in sorted(self.schur().items(), reverse=True):
            name = "s" + "".join(map(str, lam)) if max(lam) < 10 else "s" + str(list(lam))
            parts.append(f"({c})*{name}")
        return " + ".join(parts) or "0"

    def to_json(self):
        def smap(m):
            return [{"lambda": list(lam), "c": str(q)} for lam, q in sorted(m.items())]

        return {
            "n": self.n,
            "by_L": [
                {
                    "Lexp": e,
                    "schur": smap(plain),
                    "cusp": [{"weight": w, "schur": smap(m)} for w, m in sorted(cusp.items())],
                }
                for e, (plain, cusp) in sorted(self.by_L.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)

        def smap(items):
            return {tuple(d["lambda"]): mpq(d["c"]) for d in items}

        by_L = {}
        for row in data["by_L"]:
            by_L[row["Lexp"]] = (smap(row["schur"]), {c["weight"]: smap(c["schur"]) for c in row["cusp"]})
        return cls(data["n"], by_L)


def _b1_at(n, N):
    N = n if N is None else N
    if n > N:
        raise ValueError(f"degree {n} exceeds truncation {N}")
    for M in sorted(_orders):
        if M >= N:
            return pipeline(M)
    _orders.add(N)
    return pipeline(N)


def serre_equivariant(n, N=None):
    """``Serre^{S_n}(M-bar_{1,n})`` as a :class:`SerrePolynomial`."""
    part = _b1_at(n, N).degree_part(n)
    schur = to_schur(part).get(n, {})
    for lam, c in schur.items():
        if not c.is_polynomial():
            raise NonExactDivision(f"coefficient of s_{lam} is not polynomial in L")
    return SerrePolynomial.from_schur(n, schur)


def serre_nonequivariant(n, N=None):
    """``Serre(M-bar_{1,n})``, the character value at the identity, as a :class:`Coeff`."""
    part = _b1_at(n, N).degree_part(n)
    return part[(1,) * n] * factorial(n)


def poincare_check(P):
    """Poincare duality: ``L^k`` pairs with ``L^(n-k)``; ``S_w L^k`` with ``S_w L^(n-w+1-k)``."""
    n = P.n
    for e in set(P.L_exponents()) | {n - e for e in P.L_exponents()}:
        if P.coefficient(e) != P.coefficient(n - e):
            return False
    weights = {w for e in P.L_exponents() for w in P.by_L[e][1]}
    for w in weights:
        top = n - (w - 1)
        for e in P.L_exponents():
            if P.cusp_coefficient(e, w) != P.cusp_coefficient(top - e, w):
                return False
    return True


def h4_m14():
    """Schur multiplicities of ``H^4(M-bar_{1,4})``: the ``L^2`` coefficient at ``n = 4``."""
    return serre_equivariant(4).coefficient(2)


def euler_specialization(c):
    """Euler characteristic from a Serre coefficient: ``L -> 1``, ``S_w -> 2 dim S_w``."""
    values = {w: 2 * cusp_dimension(w) for w in Coeff(c).cusp_weights()}
    return Coeff(c).evaluate(1, values)
