"""Degree-truncated symmetric functions over :class:`Coeff`.

Storage is the power-sum basis: a :class:`SymFunc` is a sparse map from
partitions ``mu`` (tuples) to coefficients of ``p_mu``, together with a
truncation degree ``N``.  The classical bases ``h``, ``e`` and ``s`` are
produced on demand, and :meth:`SymFunc.to_schur` reads a degree component
back in the Schur basis.

Plethysm follows the convention in which the outer coefficients are left
alone and the Adams operation acts on the coefficients of the inner
argument: ``(c p_mu) o g = c * prod_i psi_{mu_i}(g)`` with
``psi_k(L) = L^k``.
"""
from functools import lru_cache
from math import factorial

from gmpy2 import mpq

from .coeff import ONE, Coeff, acc_add, acc_finish, acc_mul_add
from .errors import NonzeroConstantTerm
from .partitions import merge, mn_character, partition, partitions, z
from .series import ExpSeries

__all__ = [
    "SymFunc",
    "adams_sym",
    "plethysm",
    "d_p1",
    "d_p2",
    "log1p",
    "basis",
    "to_schur",
    "rk",
]


def _weight(mu):
    return sum(mu)


def _as_coeff(c):
    return c if isinstance(c, Coeff) else Coeff(c)


class SymFunc:
    """Symmetric function truncated at degree ``N`` in the power-sum basis."""

    __slots__ = ("N", "_t", "_bydeg")

    def __init__(self, terms=None, N=0):
        if N < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.N = N
        t = {}
        for mu, c in (terms or {}).items():
            mu = partition(mu)
            if _weight(mu) > N:
                continue
            c = _as_coeff(c)
            if mu in t:
                c = t[mu] + c
            if c:
                t[mu] = c
            else:
                t.pop(mu, None)
        self._t = t
        self._bydeg = None

    @classmethod
    def _raw(cls, t, N):
        obj = object.__new__(cls)
        obj.N = N
        obj._t = t
        obj._bydeg = None
        return obj

    @classmethod
    def _from_acc(cls, acc, N):
        t = {}
        for mu, a in acc.items():
            c = acc_finish(a)
            if c:
                t[mu] = c
        return cls._raw(t, N)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, N):
        return cls._raw({}, N)

    @classmethod
    def one(cls, N):
        return cls._raw({(): ONE}, N)

    @classmethod
    def constant(cls, c, N):
        c = _as_coeff(c)
        return cls._raw({(): c} if c else {}, N)

    @classmethod
    def p(cls, mu, N):
        """Power sum ``p_mu``; an int ``k`` means ``p_k``."""
        if isinstance(mu, int):
            mu = (mu,)
        return cls({mu: 1}, N)

    @classmethod
    def h(cls, n, N):
        return basis("h", n, N)

    @classmethod
    def e(cls, n, N):
        return basis("e", n, N)

    @classmethod
    def s(cls, lam, N):
        return basis("s", lam, N)

    # -- inspection ---------------------------------------------------------

    def terms(self):
        """Dict ``{mu: Coeff}`` ordered by degree then partition."""
        return dict(sorted(self._t.items(), key=lambda kv: (_weight(kv[0]), kv[0])))

    def __getitem__(self, mu):
        if isinstance(mu, int):
            mu = (mu,)
        mu = partition(mu)
        if _weight(mu) > self.N:
            raise KeyError(f"p_{mu} lies beyond the truncation degree {self.N}")
        return self._t.get(mu, Coeff(0))

    def __iter__(self):
        return iter(self.terms().items())

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def by_degree(self):
        """``{degree: [(mu, coeff), ...]}``, cached."""
        if self._bydeg is None:
            bd = {}
            for mu, c in self._t.items():
                bd.setdefault(_weight(mu), []).append((mu, c))
            self._bydeg = dict(sorted(bd.items()))
        return self._bydeg

    def min_degree(self):
        """Lowest degree present, or ``N + 1`` for zero."""
        bd = self.by_degree()
        return next(iter(bd)) if bd else self.N + 1

    def degree_part(self, n):
        if n > self.N:
            raise ValueError(f"degree {n} lies beyond the truncation degree {self.N}")
        return SymFunc._raw({mu: c for mu, c in self._t.items() if _weight(mu) == n}, self.N)

    def truncate(self, N):
        N = min(N, self.N)
        return SymFunc._raw({mu: c for mu, c in self._t.items() if _weight(mu) <= N}, N)

    def constant_term(self):
        return self._t.get((), Coeff(0))

    def is_cusp_free(self):
        return all(c.is_cusp_free() for c in self._t.values())

    def map_coeffs(self, fn):
        t = {}
        for mu, c in self._t.items():
            c = _as_coeff(fn(c))
            if c:
                t[mu] = c
        return SymFunc._raw(t, self.N)

    def __eq__(self, other):
        """Equality of all terms up to the smaller truncation degree."""
        if not isinstance(other, SymFunc):
            return NotImplemented
        N = min(self.N, other.N)
        return self.truncate(N)._t == other.truncate(N)._t

    __hash__ = None

    def __repr__(self):
        return f"SymFunc({self}, N={self.N})"

    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for mu, c in self.terms().items():
            p = "*".join(f"p{k}" for k in mu) or "1"
            out.append(f"({c})*{p}")
        return " + ".join(out)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            other = SymFunc.constant(other, self.N)
        N = min(self.N, other.N)
        t = {mu: c for mu, c in self._t.items() if _weight(mu) <= N}
        for mu, c in other._t.items():
            if _weight(mu) > N:
                continue
            s = t[mu] + c if mu in t else c
            if s:
                t[mu] = s
            else:
                t.pop(mu, None)
        return SymFunc._raw(t, N)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw({mu: -c for mu, c in self._t.items()}, self.N)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            other = SymFunc.constant(other, self.N)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            # exact up to min(N_f + val(g), N_g + val(f))
            T = min(self.N + other.min_degree(), other.N + self.min_degree(), max(self.N, other.N))
            return _mul(self, other, T)
        c = _as_coeff(other)
        if not c:
            return SymFunc.zero(self.N)
        if c == 1:
            return self
        t = {}
        for mu, v in self._t.items():
            w = v * c
            if w:
                t[mu] = w
        return SymFunc._raw(t, self.N)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, SymFunc):
            return NotImplemented
        return self.map_coeffs(lambda c: c / other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = SymFunc.one(self.N)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- calculus -----------------------------------------------------------

    def adams(self, m, N=None):
        return adams_sym(m, self, N)

    def plethysm(self, g):
        return plethysm(self, g)

    def d_p1(self):
        return d_p1(self)

    def d_p2(self):
        return d_p2(self)

    def log1p(self):
        return log1p(self)

    def exp(self):
        """``exp(self)`` for zero constant term."""
        _require_no_constant(self, "exp")
        return _power_series(self, [mpq(1, factorial(k)) for k in range(self.N + 1)])

    def geometric(self):
        """``1 / (1 - self)`` for zero constant term."""
        _require_no_constant(self, "geometric")
        return _power_series(self, [mpq(1)] * (self.N + 1))

    def rk(self):
        return rk(self)

    def to_schur(self):
        return to_schur(self)

    # -- JSON ---------------------------------------------------------------

    def to_json(self):
        return {
            "N": self.N,
            "terms": [{"mu": list(mu), "c": c.to_json()} for mu, c in self.terms().items()],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            {tuple(t["mu"]): Coeff.from_json(t["c"]) for t in data["terms"]},
            data["N"],
        )


# -- kernels ----------------------------------------------------------------


def _mul(f, g, T):
    """f * g truncated at degree T (caller guarantees validity of T)."""
    fb, gb = f.by_degree(), g.by_degree()
    acc = {}
    for da, la in fb.items():
        if da > T:
            break
        for db, lb in gb.items():
            if da + db > T:
                break
            for a, ca in la:
                for b, cb in lb:
                    key = merge(a, b)
                    slot = acc.get(key)
                    if slot is None:
                        slot = acc[key] = {}
                    acc_mul_add(slot, ca, cb)
    return SymFunc._from_acc(acc, T)


def _require_no_constant(f, what):
    if f.constant_term():
        raise NonzeroConstantTerm(f"{what} needs zero constant term")


def _power_series(u, coeffs):
    """sum_k coeffs[k] u^k for u without constant term, truncated at u.N."""
    N = u.N
    d = u.min_degree()
    out = SymFunc.constant(coeffs[0], N)
    power = SymFunc.one(N)
    k = 1
    while k * d <= N and k < len(coeffs):
        power = _mul(power, u, N)
        if coeffs[k]:
            out = out + power * coeffs[k]
        k += 1
    return out


def adams_sym(m, f, N=None):
    """psi_m: p_k -> p_{mk} with psi_m on coefficients.

    The result is exact up to degree ``m (f.N + 1) - 1``; it is truncated
    at ``N`` (default ``f.N``) or at that bound, whichever is smaller.
    """
    if m < 1:
        raise ValueError("Adams index must be positive")
    T = f.N if N is None else N
    T = min(T, m * (f.N + 1) - 1)
    if m == 1:
        return f.truncate(T)
    t = {}
    for mu, c in f._t.items():
        if m * _weight(mu) <= T:
            t[tuple(m * k for k in mu)] = c.adams(m)
    return SymFunc._raw(t, T)


def plethysm(f, g):
    """The plethysm ``f o g``; ``g`` must have zero constant term.

    The truncation of the result is the largest degree at which every
    monomial ``p_mu o g`` is determined by the known part of ``g``.
    """
    if g.constant_term():
        raise NonzeroConstantTerm("inner argument of a plethysm must have zero constant term")
    d = g.min_degree()
    T = f.N
    for mu in f._t:
        for k in set(mu):
            T = min(T, k * (g.N + 1) + d * (_weight(mu) - k) - 1)
    if T < 0:
        return SymFunc.zero(0)

    adams_cache = {}

    def psi(k):
        if k not in adams_cache:
            adams_cache[k] = adams_sym(k, g, T)
        return adams_cache[k]

    prod_cache = {}

    def prod(mu, Tp):
        # p_mu o g truncated at Tp
        key = (mu, Tp)
        if key in prod_cache:
            return prod_cache[key]
        if not mu:
            res = SymFunc.one(Tp)
        elif d * _weight(mu) > Tp:
            res = SymFunc.zero(Tp)
        else:
            k, rest = mu[0], mu[1:]
            head = psi(k).truncate(Tp - d * _weight(rest))
            if not rest:
                res = head.truncate(Tp)
            else:
                res = _mul(head, prod(rest, Tp - k * d), Tp)
        prod_cache[key] = res
        return res

    acc = {}
    for mu, c in sorted(f._t.items()):
        if d * _weight(mu) > T and mu:
            continue
        term = prod(mu, T)
        for nu, v in term._t.items():
            slot = acc.get(nu)
            if slot is None:
                slot = acc[nu] = {}
            acc_mul_add(slot, c, v)
    return SymFunc._from_acc(acc, T)


def _d_pk(f, k):
    t = {}
    for mu, c in f._t.items():
        m = mu.count(k)
        if not m:
            continue
        i = mu.index(k)
        t[mu[:i] + mu[i + 1 :]] = c * m
    return SymFunc._raw(t, max(f.N - k, 0))


def d_p1(f):
    """Partial derivative in ``p_1`` (truncation drops by one)."""
    return _d_pk(f, 1)


def d_p2(f):
    """Partial derivative in ``p_2`` (truncation drops by two)."""
    return _d_pk(f, 2)


def log1p(u):
    """``log(1 + u) = sum (-1)^(k+1) u^k / k`` for ``u`` with zero constant term."""
    _require_no_constant(u, "log1p")
    return _power_series(u, [mpq(0)] + [mpq((-1) ** (k + 1), k) for k in range(1, u.N + 1)])


@lru_cache(maxsize=None)
def _h_terms(n):
    # Newton: n h_n = sum_{k=1}^n p_k h_{n-k}
    if n == 0:
        return {(): mpq(1)}
    out = {}
    for k in range(1, n + 1):
        for mu, c in _h_terms(n - k).items():
            key = merge((k,), mu)
            out[key] = out.get(key, 0) + c / n
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _e_terms(n):
    # Newton: n e_n = sum_{k=1}^n (-1)^(k-1) p_k e_{n-k}
    if n == 0:
        return {(): mpq(1)}
    out = {}
    for k in range(1, n + 1):
        sign = 1 if k % 2 else -1
        for mu, c in _e_terms(n - k).items():
            key = merge((k,), mu)
            out[key] = out.get(key, 0) + sign * c / n
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=None)
def _s_terms(lam):
    n = _weight(lam)
    out = {}
    for mu in partitions(n):
        chi = mn_character(lam, mu)
        if chi:
            out[mu] = mpq(chi, z(mu))
    return out


def basis(kind, index, N):
    """Classical basis element ``h_n``, ``e_n`` or ``s_lambda`` in power sums."""
    if kind == "h":
        terms = _h_terms(int(index))
    elif kind == "e":
        terms = _e_terms(int(index))
    elif kind == "s":
        lam = partition((index,) if isinstance(index, int) else index)
        terms = _s_terms(lam)
    else:
        raise ValueError(f"unknown basis {kind!r}; expected 'h', 'e' or 's'")
    deg = _weight(next(iter(terms)))
    if deg > N:
        raise ValueError(f"basis element of degree {deg} exceeds truncation {N}")
    return SymFunc._raw({mu: Coeff(c) for mu, c in terms.items()}, N)


def to_schur(f):
    """Schur expansion, ``{degree: {lambda: Coeff}}``, using p_mu = sum chi^lam(mu) s_lam."""
    out = {}
    for n, items in f.by_degree().items():
        acc = {}
        for lam in partitions(n):
            slot = {}
            for mu, c in items:
                chi = mn_character(lam, mu)
                if chi:
                    acc_add(slot, c, mpq(chi))
            v = acc_finish(slot)
            if v:
                acc[lam] = v
        if acc:
            out[n] = acc
    return out


def rk(f):
    """Rank homomorphism: ``p_1 -> x``, ``p_k -> 0`` for ``k > 1``."""
    coeffs = [Coeff(0)] * (f.N + 1)
    for mu, c in f._t.items():
        if all(k == 1 for k in mu):
            coeffs[len(mu)] = c
    return ExpSeries(coeffs, f.N)


def schur_to_json(schur):
    """Schur map ``{lambda: Coeff}`` as a lexicographically sorted list."""
    return [{"lambda": list(lam), "c": c.to_json()} for lam, c in sorted(schur.items())]


def from_schur(schur, N):
    """Inverse of :func:`to_schur` for a single map ``{lambda: coeff}``."""
    out = SymFunc.zero(N)
    for lam, c in schur.items():
        out = out + basis("s", lam, N) * _as_coeff(c)
    return out
