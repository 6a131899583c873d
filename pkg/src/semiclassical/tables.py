"""Published reference values, transcribed verbatim, and the registry of known misprints.

Polynomials in ``L`` are ascending coefficient lists.  Schur maps are keyed
by partitions.  Where a published value is wrong, the transcription keeps
the published value and :data:`KNOWN_MISPRINTS` records the correction.
"""
from dataclasses import dataclass

from gmpy2 import mpq

from .mpoly import MPolynomial

__all__ = [
    "printed_mv",
    "PRINTED_SERRE_EQUIVARIANT",
    "PRINTED_SERRE",
    "PRINTED_SERRE_N11",
    "PRINTED_CHI",
    "PRINTED_GAMMA0",
    "PRINTED_TRIVIAL_EXAMPLE",
    "PRINTED_H4_M14",
    "ZAGIER_C",
    "ZAGIER_C_TILDE",
    "Misprint",
    "KNOWN_MISPRINTS",
    "misprint",
]


def _poly(rows):
    terms = {}
    for q, *vs in rows:
        key = tuple(sorted(vs))
        terms[key] = terms.get(key, 0) + mpq(q)
    return MPolynomial(terms)


_h = mpq(1, 2)
_PRINTED_MV_ROWS = {
    (0, 3): [(1, (0, 3))],
    (0, 4): [(1, (0, 4)), (3, (0, 3), (0, 3))],
    (0, 5): [(1, (0, 5)), (10, (0, 4), (0, 3)), (15, (0, 3), (0, 3), (0, 3))],
    (0, 6): [
        (1, (0, 6)),
        (15, (0, 5), (0, 3)),
        (10, (0, 4), (0, 4)),
        (105, (0, 4), (0, 3), (0, 3)),
        (105, (0, 3), (0, 3), (0, 3), (0, 3)),
    ],
    (1, 1): [(1, (1, 1)), (_h, (0, 3))],
    (1, 2): [(1, (1, 2)), (1, (1, 1), (0, 3)), (_h, (0, 4)), (_h, (0, 3), (0, 3))],
    (1, 3): [
        (1, (1, 3)),
        (3, (1, 2), (0, 3)),
        (1, (1, 1), (0, 4)),
        (_h, (0, 5)),
        (3 * _h, (0, 4), (0, 3)),
        (2 * _h, (0, 3), (0, 3), (0, 3)),
    ],
    (1, 4): [
        (1, (1, 4)),
        (6, (1, 3), (0, 3)),
        (3, (1, 2), (0, 4)),
        (15, (1, 2), (0, 3), (0, 3)),
        (1, (1, 1), (0, 5)),
        (_h, (0, 6)),
        (4 * _h, (0, 5), (0, 3)),
        (3 * _h, (0, 4), (0, 4)),
        (12 * _h, (0, 4), (0, 3), (0, 3)),
        (6 * _h, (0, 3), (0, 3), (0, 3), (0, 3)),
    ],
}


def printed_mv(g, n):
    """The published M-polynomial row for ``(g, n)``, or ``None``."""
    rows = _PRINTED_MV_ROWS.get((g, n))
    return None if rows is None else _poly(rows)


# {lambda: ascending L-coefficients}
PRINTED_SERRE_EQUIVARIANT = {
    1: {(1,): [1, 1]},
    2: {(2,): [1, 2, 1]},
    3: {(3,): [1, 3, 3, 1], (2, 1): [0, 1, 1]},
    4: {(4,): [1, 4, 7, 4, 1], (3, 1): [0, 2, 4, 2], (2, 2): [0, 1, 2, 1]},
    5: {
        (5,): [1, 5, 12, 12, 5, 1],
        (4, 1): [0, 3, 11, 11, 3],
        (3, 2): [0, 2, 7, 7, 2],
        (3, 1, 1): [0, 0, 1, 1],
        (2, 2, 1): [0, 0, 1, 1],
    },
}

PRINTED_SERRE = {
    1: [1, 1],
    2: [1, 2, 1],
    3: [1, 5, 5, 1],
    4: [1, 12, 23, 12, 1],
    5: [1, 27, 102, 102, 27, 1],
    6: [1, 58, 421, 756, 421, 58, 1],
    7: [1, 12, 1612, 5077, 5077, 1612, 121, 1],
    8: [1, 248, 5802, 31072, 52402, 31072, 5802, 248, 1],
    9: [1, 503, 19925, 175036, 480097, 480097, 175036, 19925, 503, 1],
    10: [1, 1014, 66090, 920263, 3975949, 6349238, 3975949, 920263, 66090, 1014, 1],
}

# The n = 11 row is printed only partially: {L-exponent: coefficient} and the cusp part.
PRINTED_SERRE_N11 = {
    "L": {11: 1, 10: 2037, 9: 213677, 8: 4577630, 7: 30215924, 6: 74269967, 5: 30215924, 0: 1},
    "cusp": {12: {0: -1}},
}

PRINTED_CHI = [2, 4, 12, 49, 260]
PRINTED_GAMMA0 = [1, 3, 15, 111, 1104]

PRINTED_TRIVIAL_EXAMPLE = {
    1: {(1,): 1},
    2: {(2,): 3},
    3: {(3,): 7, (2, 1): 4},
    4: {(4,): 20, (3, 1): 17, (2, 2): 14, (2, 1, 1): 4},
    5: {(5,): 52, (4, 1): 78, (3, 2): 71, (3, 1, 1): 33, (2, 2, 1): 34, (2, 1, 1, 1): 4, (1, 1, 1, 1, 1): 1},
}

PRINTED_H4_M14 = {(4,): 7, (3, 1): 4, (2, 2): 2}

ZAGIER_C = "18.31398807"
ZAGIER_C_TILDE = "0.06835794"


@dataclass(frozen=True)
class Misprint:
    key: str
    where: str
    printed: str
    recomputed: str
    reason: str


KNOWN_MISPRINTS = (
    Misprint(
        key="mv:g=1,n=2",
        where="M v_{1,2}",
        printed="v1,2 + v1,1*v0,3 + 1/2*(v0,4 + v0,3^2)",
        recomputed="v1,2 + v1,1*v0,3 + 1/2*v0,4 + v0,3^2",
        reason="two distinct graphs (double edge; loop joined to a two-leg vertex) each give 1/2*v0,3^2",
    ),
    Misprint(
        key="serre:n=7,L^1",
        where="Serre(M-bar_{1,7}), coefficient of L",
        printed="12",
        recomputed="121",
        reason="Poincare duality pairs L^1 with L^6, whose printed coefficient is 121",
    ),
    Misprint(
        key="serre:n=11,L^5",
        where="Serre(M-bar_{1,11}), coefficient of L^5",
        printed="30215924",
        recomputed="74269967",
        reason="Poincare duality pairs L^5 with L^6 (printed 74269967); the printed value repeats the L^7 coefficient",
    ),
)


def misprint(key):
    for m in KNOWN_MISPRINTS:
        if m.key == key:
            return m
    return None
