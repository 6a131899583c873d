"""The coefficient ring K = Q[L, 1/L][S12, S16, S18, ...].

``L`` is the Lefschetz class and ``S_w`` is a formal symbol for the weight
``w - 1`` Hodge structure attached to cusp forms of weight ``w``.  A
:class:`Coeff` is a sparse map from monomials ``L^a * S_w1 * S_w2 * ...`` to
exact rationals.  Internally terms are grouped by cusp monomial, so the
common cusp-free case is a single ``{L-exponent: rational}`` dictionary.

Rationals are ``gmpy2.mpq`` values; ints and ``fractions.Fraction`` are
accepted wherever a rational is expected.
"""
from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

from .errors import AdamsOnCuspSymbol, DivideByZero, NonExactDivision

__all__ = [
    "Coeff",
    "rational",
    "adams_coeff",
    "eval_L",
    "cusp_dimension",
    "L",
    "ONE",
    "ZERO",
    "acc_mul_add",
    "acc_add",
    "acc_finish",
]

_MPQ = type(mpq(0))


def rational(x):
    """Convert ``x`` (int, Fraction, mpq or a ``"num/den"`` string) to mpq."""
    if isinstance(x, _MPQ):
        return x
    if isinstance(x, str):
        return mpq(Fraction(x))
    if isinstance(x, (int, _RationalABC)):
        return mpq(x)
    raise TypeError(f"not a rational: {x!r}")


def _is_scalar(x):
    return isinstance(x, (int, _MPQ, _RationalABC))


def _padd(a, b, sign=1):
    """Sum of two {exp: q} dicts (b scaled by +-1)."""
    out = dict(a)
    for e, q in b.items():
        v = out.get(e)
        v = q * sign if v is None else v + q * sign
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _pmul(a, b):
    out = {}
    get = out.get
    for e1, q1 in a.items():
        for e2, q2 in b.items():
            e = e1 + e2
            out[e] = get(e, 0) + q1 * q2
    return {e: q for e, q in out.items() if q}


def _merge_cusps(c1, c2):
    if not c1:
        return c2
    if not c2:
        return c1
    return tuple(sorted(c1 + c2))


class Coeff:
    """Element of Q[L, 1/L][S12, S16, ...].

    Instances are immutable.  Build them from scalars, from :data:`L`, or
    with :meth:`cusp`, and combine them with the usual operators.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Coeff):
            self._t = value._t
        else:
            q = rational(value)
            self._t = {(): {0: q}} if q else {}
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = object.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def from_terms(cls, terms):
        """Build from ``{(L_exponent, cusp_weights): rational}``."""
        t = {}
        for (e, cusps), q in terms.items():
            q = rational(q)
            if not q:
                continue
            cusps = tuple(sorted(cusps))
            for w in cusps:
                _check_weight(w)
            inner = t.setdefault(cusps, {})
            v = inner.get(int(e), 0) + q
            if v:
                inner[int(e)] = v
            else:
                inner.pop(int(e), None)
        return cls._raw({c: p for c, p in t.items() if p})

    @classmethod
    def L(cls, exponent=1):
        return cls._raw({(): {int(exponent): mpq(1)}})

    @classmethod
    def cusp(cls, weight):
        """The symbol ``S_weight`` (weight even, at least 12)."""
        _check_weight(weight)
        return cls._raw({(int(weight),): {0: mpq(1)}})

    @classmethod
    def from_L_poly(cls, coeffs, shift=0):
        """``sum coeffs[i] * L^(i + shift)``."""
        p = {i + shift: rational(c) for i, c in enumerate(coeffs) if c}
        return cls._raw({(): p} if p else {})

    # -- inspection ---------------------------------------------------------

    def terms(self):
        """Dict ``{(L_exponent, cusp_weights): mpq}`` with sorted keys."""
        out = {}
        for cusps, p in self._t.items():
            for e, q in p.items():
                out[(e, cusps)] = q
        return dict(sorted(out.items(), key=lambda kv: (kv[0][1], kv[0][0])))

    def cusp_parts(self):
        """Dict ``{cusp_weights: Coeff}`` splitting off each cusp monomial."""
        return {c: Coeff._raw({(): dict(p)}) for c, p in self._t.items()}

    def L_coefficients(self):
        """``{exponent: mpq}`` of a cusp-free coefficient."""
        if not self.is_cusp_free():
            raise ValueError("coefficient contains cusp symbols")
        return dict(sorted(self._t.get((), {}).items()))

    def is_zero(self):
        return not self._t

    def is_cusp_free(self):
        return not self._t or (len(self._t) == 1 and () in self._t)

    def is_polynomial(self):
        """True when no negative power of L occurs."""
        return all(e >= 0 for p in self._t.values() for e in p)

    def is_constant(self):
        return self.is_cusp_free() and set(self._t.get((), {})) <= {0}

    def constant(self):
        """The rational value of a constant coefficient."""
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._t.get((), {}).get(0, mpq(0))

    def L_range(self):
        exps = [e for p in self._t.values() for e in p]
        if not exps:
            return None
        return min(exps), max(exps)

    def cusp_weights(self):
        return sorted({w for c in self._t for w in c})

    # -- arithmetic ---------------------------------------------------------

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, Coeff):
            return self._t == other._t
        if _is_scalar(other):
            return self._t == Coeff(other)._t
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                frozenset((c, frozenset(p.items())) for c, p in self._t.items())
            )
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Coeff):
            return other
        if _is_scalar(other):
            return Coeff(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for c, p in other._t.items():
            s = _padd(t[c], p) if c in t else p
            if s:
                t[c] = s
            else:
                t.pop(c, None)
        return Coeff._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return Coeff._raw({c: {e: -q for e, q in p.items()} for c, p in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            q = rational(other)
            if not q:
                return ZERO
            if q == 1:
                return self
            return Coeff._raw({c: {e: v * q for e, v in p.items()} for c, p in self._t.items()})
        if not isinstance(other, Coeff):
            return NotImplemented
        if not self._t or not other._t:
            return ZERO
        t = {}
        for c1, p1 in self._t.items():
            for c2, p2 in other._t.items():
                c = _merge_cusps(c1, c2)
                prod = _pmul(p1, p2)
                if c in t:
                    prod = _padd(t[c], prod)
                if prod:
                    t[c] = prod
                else:
                    t.pop(c, None)
        return Coeff._raw(t)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if _is_scalar(other):
            q = rational(other)
            if not q:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        if isinstance(other, Coeff):
            return self.divexact(other)
        return NotImplemented

    def shift(self, k):
        """Multiply by ``L^k``."""
        if not k:
            return self
        return Coeff._raw({c: {e + k: q for e, q in p.items()} for c, p in self._t.items()})

    def divexact(self, d):
        """Exact quotient by a cusp-free Laurent polynomial in L.

        Raises :class:`NonExactDivision` when the remainder is nonzero.
        """
        d = self._coerce(d)
        if d is None:
            raise TypeError("divisor must be a Coeff or rational")
        if not d._t:
            raise ZeroDivisionError("division by zero coefficient")
        if not d.is_cusp_free():
            raise ValueError("exact division only by cusp-free divisors")
        dp = d._t[()]
        s = min(dp)
        den = [mpq(0)] * (max(dp) - s + 1)
        for e, q in dp.items():
            den[e - s] = q
        if len(den) == 1:
            inv = 1 / den[0]
            return Coeff._raw(
                {c: {e - s: q * inv for e, q in p.items()} for c, p in self._t.items()}
            )
        t = {}
        for c, p in self._t.items():
            lo = min(p)
            num = [mpq(0)] * (max(p) - lo + 1)
            for e, q in p.items():
                num[e - lo] = q
            quo = _polydiv_exact(num, den)
            if quo is None:
                raise NonExactDivision(f"({self}) / ({d}) is not exact")
            t[c] = {i + lo - s: q for i, q in enumerate(quo) if q}
        return Coeff._raw(t)

    # -- ring maps ----------------------------------------------------------

    def adams(self, m):
        """Adams operation psi_m: L^a -> L^(m a), rationals fixed."""
        if m < 1:
            raise ValueError("Adams index must be positive")
        if m == 1 or not self._t:
            return self
        if not self.is_cusp_free():
            raise AdamsOnCuspSymbol(f"psi_{m} is not defined on cusp symbols ({self})")
        return Coeff._raw({(): {m * e: q for e, q in self._t[()].items()}})

    def evaluate(self, L_value, cusp_values=None):
        """Specialise ``L -> L_value`` and ``S_w -> cusp_values.get(w, 0)``."""
        v = rational(L_value)
        cusp_values = {int(w): rational(x) for w, x in (cusp_values or {}).items()}
        total = mpq(0)
        for cusps, p in self._t.items():
            cval = mpq(1)
            for w in cusps:
                cval *= cusp_values.get(w, mpq(0))
            if not cval:
                continue
            for e, q in p.items():
                if e < 0 and not v:
                    raise DivideByZero("L = 0 meets a negative power of L")
                total += q * cval * v**e
        return total

    # -- formatting ---------------------------------------------------------

    def __repr__(self):
        return f"Coeff({str(self)!r})"

    def __str__(self):
        if not self._t:
            return "0"
        pieces = []
        for (e, cusps), q in self.terms().items():
            factors = []
            if e == 1:
                factors.append("L")
            elif e:
                factors.append(f"L^{e}")
            factors.extend(f"S{w}" for w in cusps)
            mono = "*".join(factors)
            if not mono:
                body = str(abs(q))
            elif abs(q) == 1:
                body = mono
            else:
                body = f"{abs(q)}*{mono}"
            pieces.append(("-" if q < 0 else "+", body))
        s = " ".join(f"{sg} {b}" for sg, b in pieces)
        return s[2:] if s.startswith("+ ") else "-" + s[1:]

    def to_json(self):
        return [
            {"L": e, "S": list(cusps), "q": str(q)}
            for (e, cusps), q in self.terms().items()
        ]

    @classmethod
    def from_json(cls, data):
        return cls.from_terms({(d["L"], tuple(d.get("S", ()))): d["q"] for d in data})


def _check_weight(w):
    if int(w) != w or w < 12 or w % 2:
        raise ValueError(f"cusp symbols are indexed by even weights >= 12, got {w}")


def _polydiv_exact(num, den):
    """Quotient num/den of dense ascending polynomials, or None if inexact."""
    n, m = len(num) - 1, len(den) - 1
    if n < m:
        return None if any(num) else []
    rem = list(num)
    lead = den[-1]
    quo = [mpq(0)] * (n - m + 1)
    for i in range(n - m, -1, -1):
        q = rem[i + m] / lead
        quo[i] = q
        if q:
            for j in range(m + 1):
                rem[i + j] -= q * den[j]
    if any(rem[:m]):
        return None
    return quo


# Raw accumulators: {cusps: {L_exp: mpq}} dicts mutated in place.  They let
# the symmetric-function kernels sum many products without allocating a
# Coeff per partial sum.


def acc_mul_add(acc, a, b):
    """acc += a * b."""
    for c1, p1 in a._t.items():
        for c2, p2 in b._t.items():
            c = _merge_cusps(c1, c2)
            d = acc.get(c)
            if d is None:
                d = acc[c] = {}
            get = d.get
            for e1, q1 in p1.items():
                for e2, q2 in p2.items():
                    e = e1 + e2
                    d[e] = get(e, 0) + q1 * q2


def acc_add(acc, a, scale=None):
    """acc += scale * a (scale a rational or None)."""
    for c, p in a._t.items():
        d = acc.get(c)
        if d is None:
            d = acc[c] = {}
        get = d.get
        if scale is None:
            for e, q in p.items():
                d[e] = get(e, 0) + q
        else:
            for e, q in p.items():
                d[e] = get(e, 0) + q * scale


def acc_finish(acc):
    t = {}
    for c, p in acc.items():
        p = {e: q for e, q in p.items() if q}
        if p:
            t[c] = p
    return Coeff._raw(t)


def cusp_dimension(weight):
    """Dimension of the space of cusp forms of the given even weight for SL(2, Z)."""
    if weight < 0 or weight % 2:
        return 0
    if weight == 2:
        return 0
    full = weight // 12 + (0 if weight % 12 == 2 else 1)
    return max(full - 1, 0)


def adams_coeff(m, c):
    return Coeff(c).adams(m)


def eval_L(c, v, cusp_values=None):
    return Coeff(c).evaluate(v, cusp_values)


ZERO = Coeff(0)
ONE = Coeff(1)
L = Coeff.L(1)
