"""Brute-force enumeration of stable graphs of genus 0 and 1.

This is an oracle, written for correctness rather than speed.  A stable
graph with ``n`` numbered legs is stored as

* ``genera``: the genus of each vertex,
* ``edges``: a sorted tuple of vertex pairs ``(i, j)`` with ``i <= j``
  (``i == j`` is a loop; repeated pairs are parallel edges),
* ``legs``: ``legs[k]`` is the vertex carrying leg ``k + 1``.

Isomorphism classes (legs fixed) are found by first enumerating the
underlying genus-labelled multigraphs up to vertex relabelling, then
distributing the legs and identifying distributions related by a vertex
automorphism of the multigraph.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from gmpy2 import mpq

from .mpoly import MPolynomial
from .partitions import partitions, z
from .symf import SymFunc

__all__ = [
    "StableGraph",
    "enumerate_graphs",
    "aut_order",
    "aut_order_bruteforce",
    "m_polynomial",
    "perm_character",
    "orbit_count",
]


@dataclass(frozen=True)
class StableGraph:
    genera: tuple
    edges: tuple
    legs: tuple

    @property
    def n(self):
        return len(self.legs)

    def valence(self, v):
        k = sum(1 for x in self.legs if x == v)
        for i, j in self.edges:
            k += (i == v) + (j == v)
        return k

    def genus(self):
        return sum(self.genera) + len(self.edges) - len(self.genera) + 1

    def vertex_types(self):
        """Sorted multiset of ``(g(v), n(v))``."""
        return tuple(sorted((g, self.valence(v)) for v, g in enumerate(self.genera)))

    def is_stable(self):
        return all(2 * (g - 1) + self.valence(v) > 0 for v, g in enumerate(self.genera))

    def flags(self):
        """Flag-level description: ``(vertex_of_flag, involution)``.

        Flags ``0..n-1`` are the legs (fixed points of the involution); each
        edge contributes two further flags swapped by the involution.
        """
        owner = list(self.legs)
        inv = list(range(self.n))
        for i, j in self.edges:
            a, b = len(owner), len(owner) + 1
            owner += [i, j]
            inv += [b, a]
        return owner, inv

    def to_json(self):
        owner, inv = self.flags()
        return {
            "vertices": [
                {"g": g, "flags": [f for f, v in enumerate(owner) if v == k]}
                for k, g in enumerate(self.genera)
            ],
            "involution": [[f, inv[f]] for f in range(len(inv)) if f < inv[f]],
            "legs": list(range(self.n)),
        }


def _canon_base(genera, edges, perms):
    best = None
    for perm in perms:
        key = tuple(sorted(tuple(sorted((perm[i], perm[j]))) for i, j in edges))
        if best is None or key < best:
            best = key
    return best


def _connected(V, edges):
    seen = {0}
    stack = [0]
    adj = {v: set() for v in range(V)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == V


def _genus_preserving_perms(genera):
    V = len(genera)
    return [p for p in permutations(range(V)) if all(genera[p[v]] == genera[v] for v in range(V))]


@lru_cache(maxsize=None)
def _base_graphs(g, n, genus0_only):
    """Connected genus-labelled multigraphs that can carry ``n`` legs stably.

    Returns ``(genera, edges, automorphisms)`` triples, one per class.
    """
    out = []
    max_v = max(n - 2, 1) if g == 0 else n
    for V in range(1, max_v + 1):
        for h in range(0 if genus0_only else min(g, V), -1, -1) if not genus0_only else (0,):
            genera = (1,) * h + (0,) * (V - h)
            E = V - 1 + g - h
            if E < V - 1:
                continue
            perms = _genus_preserving_perms(genera)
            pairs = [(i, j) for i in range(V) for j in range(i, V)]
            seen = set()
            for edges in combinations_with_replacement(pairs, E):
                deg = [0] * V
                for i, j in edges:
                    deg[i] += 1
                    deg[j] += 1
                deficit = sum(max(0, (1 if genera[v] else 3) - deg[v]) for v in range(V))
                if deficit > n or not _connected(V, edges):
                    continue
                key = _canon_base(genera, edges, perms)
                if key in seen:
                    continue
                seen.add(key)
                auts = [
                    p for p in perms
                    if tuple(sorted(tuple(sorted((p[i], p[j]))) for i, j in key)) == key
                ]
                out.append((genera, key, tuple(auts)))
    return tuple(out)


def _canon_legs(legs, auts):
    return min(tuple(p[v] for v in legs) for p in auts)


@lru_cache(maxsize=None)
def _enumerate(g, n, genus0_only):
    graphs = []
    for genera, edges, auts in _base_graphs(g, n, genus0_only):
        V = len(genera)
        base = StableGraph(genera, edges, ())
        deg = [base.valence(v) for v in range(V)]
        need = [max(0, (1 if genera[v] else 3) - deg[v]) for v in range(V)]
        seen = set()
        for legs in product(range(V), repeat=n):
            counts = [0] * V
            for x in legs:
                counts[x] += 1
            if any(counts[v] < need[v] for v in range(V)):
                continue
            key = _canon_legs(legs, auts)
            if key in seen:
                continue
            seen.add(key)
            graphs.append(StableGraph(genera, edges, key))
    return tuple(graphs)


def enumerate_graphs(g, n, genus0_only=False):
    """One representative per isomorphism class of stable graphs in Gamma_{g,n}.

    With ``genus0_only`` only graphs all of whose vertices have genus 0 are
    returned (the set Gamma^0_{g,n}).
    """
    if g not in (0, 1):
        raise ValueError("only genus 0 and 1 are enumerated")
    if 2 * (g - 1) + n <= 0:
        raise ValueError(f"(g, n) = ({g}, {n}) is unstable")
    return list(_enumerate(g, n, genus0_only or g == 0))


def aut_order(G):
    """Order of the automorphism group (flag permutations fixing every leg).

    Vertex automorphisms of the multigraph preserving genera and leg
    positions, times ``m!`` for each bundle of ``m`` parallel edges and
    ``m! 2^m`` for ``m`` loops at a vertex.
    """
    V = len(G.genera)
    vert = 0
    key = tuple(sorted(G.edges))
    for p in permutations(range(V)):
        if any(G.genera[p[v]] != G.genera[v] for v in range(V)):
            continue
        if any(p[x] != x for x in G.legs):
            continue
        if tuple(sorted(tuple(sorted((p[i], p[j]))) for i, j in G.edges)) == key:
            vert += 1
    mult = {}
    for e in G.edges:
        mult[e] = mult.get(e, 0) + 1
    out = vert
    for (i, j), m in mult.items():
        out *= factorial(m) * (2**m if i == j else 1)
    return out


def aut_order_bruteforce(G):
    """Count flag permutations preserving owners, the involution and legs directly."""
    owner, inv = G.flags()
    n = G.n
    inner = list(range(n, len(owner)))
    V = len(G.genera)
    count = 0
    for perm in permutations(inner):
        f = list(range(n)) + list(perm)
        # induced vertex map must be well defined and genus preserving
        vmap = {}
        ok = True
        for a in range(len(owner)):
            u, w = owner[a], owner[f[a]]
            if vmap.setdefault(u, w) != w:
                ok = False
                break
        if not ok:
            continue
        if len(set(vmap.values())) != len(vmap):
            continue
        if any(G.genera[u] != G.genera[w] for u, w in vmap.items()):
            continue
        if len(vmap) < V:
            # isolated vertices carry no flags; stable graphs have none
            continue
        if all(f[inv[a]] == inv[f[a]] for a in range(len(owner))):
            count += 1
    return count


def m_polynomial(g, n):
    """``sum_G 1/|Aut G| prod_v v_{g(v), n(v)}`` over Gamma_{g,n}."""
    total = MPolynomial()
    for G in enumerate_graphs(g, n):
        total = total + MPolynomial({G.vertex_types(): mpq(1, aut_order(G))})
    return total


def _relabel(G, sigma):
    """Move leg k to position sigma[k]."""
    legs = [None] * G.n
    for k, v in enumerate(G.legs):
        legs[sigma[k]] = v
    return tuple(legs)


def _cycle_rep(mu):
    perm = []
    start = 0
    for k in mu:
        perm += [start + (i + 1) % k for i in range(k)]
        start += k
    return perm


def perm_character(n, g=1, genus0_only=True):
    """Frobenius characteristic of S_n permuting leg labels of Gamma^0_{g,n}."""
    graphs = enumerate_graphs(g, n, genus0_only)
    auts = {(gen, e): a for gen, e, a in _base_graphs(g, n, genus0_only or g == 0)}
    index = {(G.genera, G.edges, G.legs) for G in graphs}
    terms = {}
    for mu in partitions(n):
        sigma = _cycle_rep(mu)
        fixed = 0
        for G in graphs:
            legs = _canon_legs(_relabel(G, sigma), auts[(G.genera, G.edges)])
            assert (G.genera, G.edges, legs) in index
            if legs == G.legs:
                fixed += 1
        if fixed:
            terms[mu] = mpq(fixed, z(mu))
    return SymFunc(terms, n)


def orbit_count(n, g=1, genus0_only=True):
    """Number of classes once the legs are unordered (union-find over S_n generators)."""
    graphs = enumerate_graphs(g, n, genus0_only)
    auts = {(gen, e): a for gen, e, a in _base_graphs(g, n, genus0_only or g == 0)}
    pos = {(G.genera, G.edges, G.legs): k for k, G in enumerate(graphs)}
    parent = list(range(len(graphs)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    gens = [_cycle_rep((2,) + (1,) * (n - 2))] if n >= 2 else []
    if n >= 3:
        gens.append([(i + 1) % n for i in range(n)])
    for k, G in enumerate(graphs):
        for sigma in gens:
            legs = _canon_legs(_relabel(G, sigma), auts[(G.genera, G.edges)])
            a, b = find(k), find(pos[(G.genera, G.edges, legs)])
            if a != b:
                parent[a] = b
    return len({find(k) for k in range(len(graphs))})
