"""Small arithmetic functions by trial factorisation."""
from functools import lru_cache

__all__ = ["factorize", "divisors", "mobius", "totient"]


@lru_cache(maxsize=None)
def factorize(n):
    """Prime factorisation as a tuple of (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n):
    ds = [1]
    for p, e in factorize(n):
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return tuple(sorted(ds))


def mobius(n):
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def totient(n):
    out = n
    for p, _ in factorize(n):
        out = out // p * (p - 1)
    return out
