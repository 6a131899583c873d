"""Integer partitions as non-increasing tuples, plus symmetric-group characters."""
from functools import lru_cache
from math import factorial, prod

__all__ = [
    "partitions",
    "partition",
    "z",
    "multiplicities",
    "merge",
    "mn_character",
    "conjugate",
    "cycle_type",
]


def partition(parts):
    """Normalise an iterable of positive ints to a partition tuple."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


@lru_cache(maxsize=None)
def partitions(n, max_part=None):
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def multiplicities(mu):
    m = {}
    for k in mu:
        m[k] = m.get(k, 0) + 1
    return m


@lru_cache(maxsize=None)
def z(mu):
    """Centraliser order z_mu = prod_i i^m_i m_i!."""
    return prod(k**m * factorial(m) for k, m in multiplicities(mu).items())


@lru_cache(maxsize=1 << 18)
def merge(a, b):
    """Union of two partitions as multisets."""
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def cycle_type(perm):
    """Cycle type of a permutation given as a sequence ``i -> perm[i]``."""
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        k, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            k += 1
        lengths.append(k)
    return partition(lengths)


def _beta(lam, length):
    return tuple(lam[i] + length - 1 - i if i < len(lam) else length - 1 - i for i in range(length))


@lru_cache(maxsize=None)
def _mn(beta, mu):
    # beta: strictly decreasing bead positions; mu: remaining cycle lengths
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in beads:
            continue
        sign = -1 if sum(1 for c in beta if t < c < b) % 2 else 1
        new = tuple(sorted((t if c == b else c for c in beta), reverse=True))
        total += sign * _mn(new, rest)
    return total


def mn_character(lam, mu):
    """Irreducible character chi^lam at cycle type mu (Murnaghan-Nakayama)."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    return _mn(_beta(lam, len(lam)), mu)
