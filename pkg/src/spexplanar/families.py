"""Linear forests and the K2-join constructions built from them.

A linear forest here is a disjoint union of paths, described by its part
list (path orders). The joins place the two hub vertices first, then the
path blocks with consecutive labels, so callers that reason about "the i-th
vertex of the j-th path" get stable indices:

    vertex 0, 1        the two hubs u', u''
    vertex 2 ...       first path, in path order
    next block         second path, and so on

`k2_join` uses the canonical (non-increasing) part order. Verifier code that
needs a specific block order (longest path need not come first) uses
`join_with_paths` directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import Graph, from_edges, is_planar


@dataclass(frozen=True)
class LinearForest:
    """Part list of a disjoint union of paths, stored non-increasing."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a linear forest needs at least one part")
        for p in self.parts:
            if p < 1:
                raise ValueError(f"path order must be >= 1, got {p}")
        object.__setattr__(
            self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def order(self) -> int:
        return sum(self.parts)

    @property
    def size(self) -> int:
        """Edge count: order minus number of paths."""
        return self.order - len(self.parts)

    def two_largest(self) -> tuple[int, int]:
        """(n1, n2); n2 is 0 for a single-path forest."""
        n1 = self.parts[0]
        n2 = self.parts[1] if len(self.parts) > 1 else 0
        return n1, n2


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError(f"need both sides nonempty, got {a}, {b}")
    return from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def build_linear_forest(parts: Sequence[int]) -> Graph:
    """Disjoint union of paths, blocks in non-increasing part order."""
    lf = LinearForest(tuple(parts))
    edges = []
    base = 0
    for p in lf.parts:
        edges.extend((base + i, base + i + 1) for i in range(p - 1))
        base += p
    return from_edges(lf.order, edges)


def join_with_paths(parts: Sequence[int], dominating_edge: bool = True) -> Graph:
    """Two hubs joined to path blocks laid out in the order given.

    This is the raw builder: `parts` is taken as the block layout, not
    sorted. Hubs are vertices 0 and 1; block j starts at 2 + sum(parts[:j]).
    """
    for p in parts:
        if p < 1:
            raise ValueError(f"path order must be >= 1, got {p}")
    m = sum(parts)
    n = m + 2
    edges = [(0, 1)] if dominating_edge else []
    base = 2
    for p in parts:
        edges.extend((base + i, base + i + 1) for i in range(p - 1))
        base += p
    edges.extend((0, v) for v in range(2, n))
    edges.extend((1, v) for v in range(2, n))
    return from_edges(n, edges)


def k2_join(forest: LinearForest | Sequence[int],
            dominating_edge: bool = True) -> Graph:
    """Join the forest to two hub vertices (canonical layout).

    With `dominating_edge` the hubs are adjacent to each other as well, i.e.
    the join with a 1-edge graph on two vertices; without it the hubs are
    only adjacent to the forest (so all-singleton parts give K_{2,m}).
    The result is planar either way; for orders up to 200 this is asserted.
    """
    lf = forest if isinstance(forest, LinearForest) else LinearForest(tuple(forest))
    g = join_with_paths(lf.parts, dominating_edge)
    if g.n <= 200:
        assert is_planar(g), "K2-join of a linear forest must be planar"
    return g


def extremal_graph(n: int, k: int) -> Graph:
    """The conjectured maximizer: hubs + paths of orders n-2k-4, k+1, k+1.

    Requires k >= 0 and n >= 3k+7 so the head part dominates the two tails.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if n < 3 * k + 7:
        raise ValueError(f"need n >= 3k+7 = {3 * k + 7}, got n={n}")
    return k2_join(LinearForest((n - 2 * k - 4, k + 1, k + 1)))


def enumerate_lna(n: int, a: int) -> Iterator[LinearForest]:
    """All linear forests of order n-2 with exactly a+1 parts.

    Equivalently the partitions of n-2 into exactly a+1 positive parts,
    yielded with parts non-increasing, in reverse-lexicographic order
    (so [m-a, 1, ..., 1] comes first and the most balanced split last).
    Requires n >= a+3 so the family is nonempty.
    """
    if a < 0:
        raise ValueError(f"a must be >= 0, got {a}")
    if n < a + 3:
        raise ValueError(f"need n >= a+3 = {a + 3}, got n={n}")
    for parts in _partitions_desc(n - 2, a + 1, n - 2):
        yield LinearForest(tuple(parts))


def _partitions_desc(total: int, k: int, cap: int) -> Iterator[list[int]]:
    """Partitions of `total` into exactly `k` parts, each <= cap,
    non-increasing within each partition, in reverse-lex order."""
    if k == 0:
        if total == 0:
            yield []
        return
    if total < k:
        return
    # first part from largest feasible down; the rest must fit k-1 parts
    hi = min(cap, total - (k - 1))
    lo = -(-total // k)  # ceil(total/k) keeps the sequence non-increasing
    for p in range(hi, lo - 1, -1):
        for rest in _partitions_desc(total - p, k - 1, p):
            yield [p] + rest


def count_lna(n: int, a: int) -> int:
    """|L_{n,a}| by direct enumeration (small inputs only)."""
    return sum(1 for _ in enumerate_lna(n, a))
