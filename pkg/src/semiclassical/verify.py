"""Acceptance checks shared by ``semiclassical verify`` and the test-suite.

Each criterion produces a list of :class:`Check` items.  An item is
``pass``, ``fail``, or ``documented-deviation`` (we differ from a published
value that is listed in :data:`~semiclassical.tables.KNOWN_MISPRINTS`).  A
criterion passes when none of its items fail.
"""
import random
import time
from dataclasses import asdict, dataclass, field
from math import factorial

import mpmath
from gmpy2 import mpq

from . import genus1, moduli
from .coeff import Coeff
from .eulerchar import asymptotic_check, chi_series, gamma0_series, zagier_constants
from .graphoracle import enumerate_graphs, m_polynomial, perm_character
from .legendre import legendre_sym
from .numtheory import divisors, mobius, totient
from .partitions import partitions
from .series import ExpSeries
from .symf import SymFunc, d_p1, plethysm, to_schur
from .tables import (
    PRINTED_CHI,
    PRINTED_GAMMA0,
    PRINTED_H4_M14,
    PRINTED_SERRE,
    PRINTED_SERRE_EQUIVARIANT,
    PRINTED_SERRE_N11,
    PRINTED_TRIVIAL_EXAMPLE,
    ZAGIER_C,
    misprint,
    printed_mv,
)

__all__ = ["Check", "CriterionResult", "Report", "CRITERIA", "SUITES", "run", "run_criterion"]

PASS, FAIL, DEVIATION = "pass", "fail", "documented-deviation"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""


@dataclass
class CriterionResult:
    number: int
    title: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0
    limit: float = None

    @property
    def ok(self):
        return all(c.status != FAIL for c in self.checks)

    @property
    def status(self):
        if not self.ok:
            return FAIL
        if any(c.status == DEVIATION for c in self.checks):
            return DEVIATION
        return PASS

    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    def line(self):
        extra = "" if self.ok else "; failing: " + ", ".join(c.name for c in self.failures())
        return f"[{self.status.upper()}] criterion {self.number}: {self.title} ({self.seconds:.2f}s){extra}"

    def to_json(self):
        return {
            "criterion": self.number,
            "title": self.title,
            "status": self.status,
            "seconds": round(self.seconds, 3),
            "limit_seconds": self.limit,
            "checks": [asdict(c) for c in self.checks],
        }


@dataclass
class Report:
    results: list

    @property
    def ok(self):
        return all(r.ok for r in self.results)

    def to_json(self):
        return {"ok": self.ok, "criteria": [r.to_json() for r in self.results]}


def _check(name, good, detail=""):
    return Check(name, PASS if good else FAIL, detail)


def _L_poly(coeffs):
    return Coeff.from_L_poly(coeffs)


# -- criteria ---------------------------------------------------------------


def criterion_1():
    """Scalar M-tables from the formula, the oracle and the printed rows."""
    out = []
    formula = genus1.mv_symbolic(6)
    keys = [(0, n) for n in range(3, 7)] + [(1, n) for n in range(1, 5)]
    for g, n in keys:
        f = formula[(g, n)]
        oracle = m_polynomial(g, n)
        out.append(_check(f"formula=oracle (g={g}, n={n})", f == oracle, str(f)))
        printed = printed_mv(g, n)
        name = f"formula=printed (g={g}, n={n})"
        if f == printed:
            out.append(Check(name, PASS))
            continue
        note = misprint(f"mv:g={g},n={n}")
        if note is not None and f == oracle:
            out.append(Check(name, DEVIATION, f"printed {printed}; recomputed {f}"))
        else:
            out.append(Check(name, FAIL, f"printed {printed}; recomputed {f}; oracle {oracle}"))
    return out


def random_lambda_star(rng, N=8):
    """Random ``f`` with ``rk(f) = x^2/2 + O(x^3)`` and small coefficients in ``Q[L]``."""
    terms = {(1, 1): mpq(1, 2), (2,): mpq(rng.randint(-3, 3), rng.randint(1, 3))}
    for n in range(3, N + 1):
        for mu in partitions(n):
            if rng.random() < 0.5:
                continue
            coeffs = [mpq(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]
            terms[mu] = _L_poly(coeffs)
    return SymFunc(terms, N)


def legendre_properties(f):
    """``(L(L f) == f, (L f)' o f' == h_1)``."""
    g = legendre_sym(f)
    invol = legendre_sym(g) == f
    comp = plethysm(d_p1(g), d_p1(f))
    return invol, comp == SymFunc.p(1, comp.N)


def criterion_2(count=20, seed=20240601):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        f = random_lambda_star(rng)
        invol, comp = legendre_properties(f)
        out.append(_check(f"involution #{i}", invol))
        out.append(_check(f"(Lf)' o f' = h1 #{i}", comp))
    return out


def criterion_3():
    out = []
    B = genus1.b1(genus1.trivial_module(7))
    for n, expected in PRINTED_TRIVIAL_EXAMPLE.items():
        part = B.degree_part(n)
        schur = to_schur(part).get(n, {})
        got = {lam: c for lam, c in schur.items()}
        want = {lam: Coeff(q) for lam, q in expected.items()}
        out.append(_check(f"Schur expansion n={n}", got == want, str(got)))
        dim = part[(1,) * n] * factorial(n) if part[(1,) * n] else Coeff(0)
        out.append(_check(f"dimension n={n}", dim == PRINTED_GAMMA0[n - 1], str(dim)))
        pc = perm_character(n)
        out.append(_check(f"oracle character n={n}", pc == part.truncate(n)))
    return out


def criterion_4():
    out = []
    for n, expected in PRINTED_SERRE_EQUIVARIANT.items():
        got = moduli.serre_equivariant(n, 5).schur()
        want = {lam: _L_poly(c) for lam, c in expected.items()}
        out.append(_check(f"equivariant n={n}", got == want, str(got)))
    return out


def criterion_5(N=11):
    out = []
    for n, printed in PRINTED_SERRE.items():
        got = moduli.serre_nonequivariant(n, N)
        want = _L_poly(printed)
        if got == want:
            out.append(Check(f"serre n={n}", PASS))
        elif n == 7 and misprint("serre:n=7,L^1") is not None and got == _L_poly([1, 121] + printed[2:]):
            out.append(Check(f"serre n={n}", DEVIATION, f"printed {want}; recomputed {got}"))
        else:
            out.append(Check(f"serre n={n}", FAIL, f"printed {want}; recomputed {got}"))
    lin7 = moduli.serre_nonequivariant(7, N).L_coefficients().get(1)
    out.append(_check("n=7 linear coefficient is 121", lin7 == 121, str(lin7)))
    got = moduli.serre_nonequivariant(11, N)
    parts = got.cusp_parts()
    plain = parts.get((), Coeff(0)).L_coefficients()
    for e, q in sorted(PRINTED_SERRE_N11["L"].items()):
        name = f"n=11 coefficient of L^{e}"
        if plain.get(e, 0) == q:
            out.append(Check(name, PASS))
        elif misprint(f"serre:n=11,L^{e}") is not None and plain.get(e) == plain.get(11 - e):
            out.append(Check(name, DEVIATION, f"printed {q}; recomputed {plain.get(e)}"))
        else:
            out.append(Check(name, FAIL, f"printed {q}; recomputed {plain.get(e, 0)}"))
    for w, row in PRINTED_SERRE_N11["cusp"].items():
        cusp = parts.get((w,), Coeff(0))
        out.append(_check(f"n=11 S{w} term", cusp == Coeff.from_terms({(e, ()): q for e, q in row.items()}), str(cusp)))
    return out


def criterion_6(N=11):
    return [_check(f"duality n={n}", moduli.poincare_check(moduli.serre_equivariant(n, N))) for n in range(1, N + 1)]


def criterion_7():
    got = moduli.h4_m14()
    return [_check("H^4(M-bar_{1,4})", got == PRINTED_H4_M14, str(got))]


def criterion_8(N=30):
    out = []
    chi = chi_series(N).egf()
    out.append(_check("chi n<=5", chi[1:6] == PRINTED_CHI, str(chi[1:6])))
    out.append(_check("chi integral n<=30", all(c.denominator == 1 for c in chi)))
    via_serre = [moduli.euler_specialization(moduli.serre_nonequivariant(n, 5)) for n in range(1, 6)]
    out.append(_check("chi = Serre at L=1, n<=5", via_serre == chi[1:6], str(via_serre)))
    gam = gamma0_series(N).egf()
    out.append(_check("gamma0 n<=5", gam[1:6] == PRINTED_GAMMA0, str(gam[1:6])))
    counts = [len(enumerate_graphs(1, n, genus0_only=True)) for n in range(1, 6)]
    out.append(_check("gamma0 = oracle count", counts == gam[1:6], str(counts)))
    return out


def criterion_9():
    out = []
    C, _ = zagier_constants(30)
    out.append(_check("C closed form", abs(C - mpmath.mpf(ZAGIER_C)) <= mpmath.mpf("1e-8"), mpmath.nstr(C, 12)))
    rep = asymptotic_check(200)
    band = "; ".join(f"n={n}: gap {mpmath.nstr(g, 4)} <= {mpmath.nstr(b, 4)}" for n, _, g, b in rep.samples)
    out.append(_check("|(r_n - 1) sqrt n - C| <= K/n", rep.within_band, f"K={mpmath.nstr(rep.K, 5)}; {band}"))
    out.append(_check("gap decreasing on n=100..200", rep.monotone))
    return out


def _psi_scalar(f, m, N):
    out = [0] * (N + 1)
    for i, c in enumerate(f.c):
        if i * m <= N:
            out[i * m] = c
    return ExpSeries(out, N)


def log_product_sides(f, N=8):
    """Both sides of the log-product identity for a scalar series ``f = 1 + O(x)``."""
    u = f - 1
    logs = {n: _psi_scalar(u.log1p(), n, N) for n in range(1, N + 1)}
    H = ExpSeries.constant(0, N)
    for n in range(1, N + 1):
        H = H + logs[n] * mpq(-1, 2)
    lhs = ExpSeries.constant(0, N)
    for k in range(1, N + 1):
        if mobius(k):
            lhs = lhs + _psi_scalar(H, k, N) * mpq(mobius(k), k)
    rhs = ExpSeries.constant(0, N)
    for n in range(1, N + 1):
        rhs = rhs + logs[n] * mpq(-totient(n), 2 * n)
    return lhs, rhs


def criterion_10(seed=7):
    out = []
    nk = genus1.necklace_characteristic(8)
    for n in range(1, 9):
        out.append(_check(f"necklace degree {n} = cycle index of Z_{n}", nk.degree_part(n) == genus1.cyclic_cycle_index(n, 8)))
    mob = all(sum(mpq(mobius(d), d) for d in divisors(n)) == mpq(totient(n), n) for n in range(1, 101))
    out.append(_check("sum mu(d)/d = phi(n)/n, n<=100", mob))
    rng = random.Random(seed)
    for i in range(5):
        f = ExpSeries([1] + [mpq(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(8)], 8)
        lhs, rhs = log_product_sides(f)
        out.append(_check(f"log-product identity #{i}", lhs == rhs))
    return out


CRITERIA = {
    1: ("scalar M-tables", criterion_1, 1.0),
    2: ("symmetric Legendre involution", criterion_2, 30.0),
    3: ("trivial-module example", criterion_3, 120.0),
    4: ("equivariant Serre polynomials n<=5", criterion_4, 120.0),
    5: ("Serre polynomials n<=11", criterion_5, 600.0),
    6: ("Poincare duality n<=11", criterion_6, None),
    7: ("H^4 of M-bar_{1,4}", criterion_7, None),
    8: ("Euler characteristics", criterion_8, 5.0),
    9: ("asymptotics", criterion_9, 30.0),
    10: ("identities", criterion_10, None),
}

SUITES = {
    "mv": [1],
    "legendre": [1, 2],
    "trivial": [3],
    "serre": [4, 5, 6, 7],
    "euler": [8],
    "asymp": [9],
    "identities": [10],
}


def run_criterion(number):
    title, fn, limit = CRITERIA[number]
    start = time.perf_counter()
    try:
        checks = fn()
    except Exception as exc:  # reported, not raised: one broken criterion must not hide the rest
        checks = [Check("raised", FAIL, f"{type(exc).__name__}: {exc}")]
    seconds = time.perf_counter() - start
    if limit is not None:
        checks.append(_check(f"runtime <= {limit:g}s", seconds <= limit, f"{seconds:.2f}s"))
    return CriterionResult(number, title, checks, seconds, limit)


def run(only=None):
    """Run the acceptance suite, or the named suite from :data:`SUITES`."""
    if only is None:
        numbers = sorted(CRITERIA)
    elif only in SUITES:
        numbers = SUITES[only]
    else:
        raise KeyError(f"unknown suite {only!r}; choose from {', '.join(SUITES)}")
    return Report([run_criterion(k) for k in numbers])
