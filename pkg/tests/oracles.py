"""Independent reference implementations the tests check the package against.

Nothing in here imports from spexplanar's internals beyond the Graph value
type: the point is that eigenvalues, planarity, and cycle sets come from a
second, unrelated route (LAPACK via eigvalsh, Kuratowski subdivision search,
Johnson's algorithm in networkx) so agreement is meaningful.
"""

from __future__ import annotations

import heapq
import random
from itertools import combinations, permutations

import networkx as nx
import numpy as np

from spexplanar import Graph, from_edges


def dense_rho(g: Graph) -> float:
    """Spectral radius through the dense symmetric eigensolver."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    if g.n == 0:
        return 0.0
    return float(np.linalg.eigvalsh(a)[-1])


def dense_perron(g: Graph) -> np.ndarray:
    """Max-normalized leading eigenvector (connected inputs only)."""
    a = np.zeros((g.n, g.n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    vals, vecs = np.linalg.eigh(a)
    x = vecs[:, -1]
    # eigh fixes sign arbitrarily; a Perron vector is one-signed
    if x.sum() < 0:
        x = -x
    return x / x.max()


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def cycle_lengths(g: Graph) -> set[int]:
    """Set of simple-cycle lengths, via networkx (small graphs only)."""
    return {len(c) for c in nx.simple_cycles(to_nx(g))}


# --- seeded random graphs ----------------------------------------------------


def prufer_tree_edges(rng: random.Random, n: int) -> list[tuple[int, int]]:
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.randrange(n) for _ in range(n - 2)]
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_connected(rng: random.Random, n: int, extra: int = -1) -> Graph:
    """Uniform random tree plus `extra` chords (default: up to n random)."""
    edges = {(min(u, v), max(u, v)) for u, v in prufer_tree_edges(rng, n)}
    if extra < 0:
        extra = rng.randrange(0, max(1, n))
    for _ in range(extra):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return from_edges(n, edges)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    """G(n, p); may be disconnected or empty."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


# --- partition counting -------------------------------------------------------


def partition_count(m: int, k: int, _memo={}) -> int:
    """Partitions of m into exactly k positive parts, by the standard
    recurrence p(m,k) = p(m-1,k-1) + p(m-k,k)."""
    if k == 0:
        return 1 if m == 0 else 0
    if m < k:
        return 0
    key = (m, k)
    if key not in _memo:
        _memo[key] = partition_count(m - 1, k - 1) + partition_count(m - k, k)
    return _memo[key]


def partitions_exact(m: int, k: int) -> list[tuple[int, ...]]:
    """All partitions of m into exactly k parts, brute force, any order."""
    if k == 1:
        return [(m,)] if m >= 1 else []
    out = []
    for first in range(-(-m // k), m - k + 2):
        for rest in partitions_exact(m - first, k - 1):
            if rest[0] <= first:
                out.append((first,) + rest)
    return out


# --- planarity by Kuratowski subdivision search -------------------------------
#
# Exact for any n, practical for n <= 10: a graph is planar iff it contains
# no subdivision of K5 or K3,3. Branch vertices are chosen directly; the
# connecting paths may pass through the remaining vertices, which for small n
# is a tiny disjoint-set-cover search.


def _usable_internal_sets(adj, a, b, spares):
    """Spare-vertex sets that can form the interior of an a..b path."""
    out = set()
    spares = tuple(spares)
    for r in range(1, len(spares) + 1):
        for combo in combinations(spares, r):
            for perm in permutations(combo):
                if (perm[0] in adj[a] and perm[-1] in adj[b]
                        and all(perm[i + 1] in adj[perm[i]]
                                for i in range(len(perm) - 1))):
                    out.add(frozenset(perm))
                    break
    return out


def _connect_all(adj, pairs, spares):
    options = []
    for a, b in pairs:
        opts = [frozenset()] if b in adj[a] else []
        opts.extend(_usable_internal_sets(adj, a, b, spares))
        if not opts:
            return False
        options.append(opts)
    options.sort(key=len)

    def rec(i, used):
        if i == len(options):
            return True
        for s in options[i]:
            if not (s & used) and rec(i + 1, used | s):
                return True
        return False

    return rec(0, frozenset())


def has_k5_subdivision(g: Graph) -> bool:
    if g.n < 5 or g.edge_count() < 10:
        return False
    adj = [set(row) for row in g.adj]
    cand = [v for v in range(g.n) if len(adj[v]) >= 4]
    if len(cand) < 5:
        return False
    allv = set(range(g.n))
    for branch in combinations(cand, 5):
        spares = allv - set(branch)
        if _connect_all(adj, list(combinations(branch, 2)), spares):
            return True
    return False


def has_k33_subdivision(g: Graph) -> bool:
    if g.n < 6 or g.edge_count() < 9:
        return False
    adj = [set(row) for row in g.adj]
    cand = [v for v in range(g.n) if len(adj[v]) >= 3]
    if len(cand) < 6:
        return False
    allv = set(range(g.n))
    for six in combinations(cand, 6):
        spares = allv - set(six)
        rest = six[1:]
        for others in combinations(rest, 2):
            side_a = (six[0],) + others
            side_b = [v for v in rest if v not in others]
            pairs = [(a, b) for a in side_a for b in side_b]
            if _connect_all(adj, pairs, spares):
                return True
    return False


def planar_by_kuratowski(g: Graph) -> bool:
    return not (has_k5_subdivision(g) or has_k33_subdivision(g))
