"""Fixed-length cycle search, constructive certificates, cycle spectra.

`find_cycle` is an exact backtracking search: a returned certificate is a
real cycle (revalidated before return) and `None` means a completed proof of
absence. Exhaustion of the node budget is a third outcome, raised as
SearchBudgetExceeded, never folded into "absent".

Graphs that are two universal hubs over a linear forest get a constructive
fast path: such a graph has every cycle length from 3 up to n1+n2+2 (two
largest path orders plus the hubs) and nothing longer, and the certificate
is written down directly instead of searched for.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .families import LinearForest, k2_join
from .graphs import Graph, is_planar

DEFAULT_BUDGET = 10 ** 7


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, ell: int, budget: int):
        super().__init__(
            f"cycle search for length {ell} exhausted its budget of "
            f"{budget} node expansions")
        self.ell = ell
        self.budget = budget


def validate_cycle(g: Graph, cycle: Sequence[int]) -> None:
    """Raise ValueError unless `cycle` is a simple cycle of g."""
    k = len(cycle)
    if k < 3:
        raise ValueError(f"cycle needs >= 3 vertices, got {k}")
    if len(set(cycle)) != k:
        raise ValueError("cycle repeats a vertex")
    for u in cycle:
        if not 0 <= u < g.n:
            raise ValueError(f"vertex {u} out of range")
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % k]
        if not g.has_edge(u, v):
            raise ValueError(f"missing edge ({u}, {v}) in claimed cycle")


def find_cycle(g: Graph, ell: int,
               budget: int = DEFAULT_BUDGET) -> Optional[list[int]]:
    """Exact search for a cycle of exactly `ell` vertices.

    Returns the cycle as a vertex list (smallest vertex first) or None when
    none exists. The search anchors at each possible smallest cycle vertex,
    restricts to the 2-core of the remaining vertices, and prunes on BFS
    distance back to the anchor. Raises SearchBudgetExceeded when the shared
    node budget runs out before either outcome is proven.
    """
    if not 3 <= ell <= g.n:
        raise ValueError(f"cycle length must be in [3, {g.n}], got {ell}")
    remaining = [budget]
    for s in range(g.n - ell + 1):
        found = _search_anchor(g, s, ell, remaining, budget)
        if found is not None:
            validate_cycle(g, found)
            return found
    return None


def _search_anchor(g: Graph, s: int, ell: int,
                   remaining: list[int], budget: int) -> Optional[list[int]]:
    n = g.n
    # candidate vertex set: the anchor plus everything above it
    alive = bytearray(n)
    for v in range(s, n):
        alive[v] = 1
    deg = [0] * n
    for v in range(s, n):
        deg[v] = sum(1 for w in g.adj[v] if w >= s)
    # prune to the 2-core: cycle vertices need two live neighbors
    queue = [v for v in range(s, n) if deg[v] < 2]
    while queue:
        v = queue.pop()
        if not alive[v]:
            continue
        alive[v] = 0
        for w in g.adj[v]:
            if alive[w]:
                deg[w] -= 1
                if deg[w] < 2:
                    queue.append(w)
    if not alive[s]:
        return None
    adj = [[w for w in g.adj[v] if alive[w]] if alive[v] else []
           for v in range(n)]
    # BFS distance to the anchor: a lower bound on steps needed to close
    dist = [n + 1] * n
    dist[s] = 0
    frontier = [s]
    reach = 1
    while frontier:
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if dist[w] > dist[v] + 1:
                    dist[w] = dist[v] + 1
                    nxt.append(w)
                    reach += 1
        frontier = nxt
    if reach < ell:
        return None

    visited = bytearray(n)
    visited[s] = 1
    path = [s]
    target = ell - 1  # edges before the closing edge
    s_nbrs = set(adj[s])

    def dfs(v: int, depth: int) -> bool:
        remaining[0] -= 1
        if remaining[0] < 0:
            raise SearchBudgetExceeded(ell, budget)
        if depth == target:
            return v in s_nbrs
        cap = ell - depth - 1
        for w in adj[v]:
            if not visited[w] and dist[w] <= cap:
                visited[w] = 1
                path.append(w)
                if dfs(w, depth + 1):
                    return True
                path.pop()
                visited[w] = 0
        return False

    if dfs(s, 0):
        return path
    return None


# --- hub-over-forest recognition and constructive certificates --------------


def recognize_hub_forest(g: Graph) -> Optional[tuple[int, int, list[list[int]]]]:
    """Detect "two universal hubs over a linear forest" structure exactly.

    Returns (hub1, hub2, paths) where each path is its vertex sequence in
    path order, longest first, or None when the structure is absent. The
    test is exact: exactly two vertices of degree n-1, and the rest must
    induce a disjoint union of paths.
    """
    n = g.n
    hubs = [v for v in range(n) if g.degree(v) == n - 1]
    if len(hubs) != 2 or n < 3:
        return None
    hubset = set(hubs)
    rest = [v for v in range(n) if v not in hubset]
    nbr = {v: [w for w in g.adj[v] if w not in hubset] for v in rest}
    if any(len(ws) > 2 for ws in nbr.values()):
        return None
    paths: list[list[int]] = []
    seen: set[int] = set()
    for v in rest:
        if v in seen or len(nbr[v]) == 2:
            continue
        # endpoint (or isolated vertex): walk to the other end
        seq = [v]
        seen.add(v)
        prev, cur = v, (nbr[v][0] if nbr[v] else None)
        while cur is not None:
            seq.append(cur)
            seen.add(cur)
            ext = [w for w in nbr[cur] if w != prev]
            prev, cur = cur, (ext[0] if ext else None)
        paths.append(seq)
    if len(seen) != len(rest):
        return None  # leftover vertices all have degree 2: a cycle, not a path
    paths.sort(key=lambda p: (-len(p), p[0]))
    return hubs[0], hubs[1], paths


def hub_forest_cycle(hub1: int, hub2: int, paths: list[list[int]],
                     ell: int) -> Optional[list[int]]:
    """Cycle of length `ell` through both hubs and prefixes of the two
    longest paths; None when 3 <= ell <= n1+n2+2 fails."""
    n1 = len(paths[0])
    n2 = len(paths[1]) if len(paths) > 1 else 0
    if ell < 3 or ell > n1 + n2 + 2:
        return None
    a = min(n1, ell - 2)
    b = ell - 2 - a
    return [hub1] + paths[0][:a] + [hub2] + (paths[1][:b] if b else [])


def join_cycle_certificate(forest: LinearForest | Sequence[int],
                           ell: int) -> Optional[list[int]]:
    """Constructive cycle in the canonical hub join of `forest`.

    Vertex labels follow the canonical layout (hubs 0 and 1, then path
    blocks, parts non-increasing). The certificate is validated against the
    actual join before being returned.
    """
    lf = forest if isinstance(forest, LinearForest) else LinearForest(tuple(forest))
    base = 2
    paths = []
    for p in lf.parts:
        paths.append(list(range(base, base + p)))
        base += p
    cyc = hub_forest_cycle(0, 1, paths, ell)
    if cyc is not None:
        validate_cycle(k2_join(lf), cyc)
    return cyc


# --- spectra -----------------------------------------------------------------


@dataclass(frozen=True)
class CycleRecord:
    ell: int
    status: str  # "present" | "absent" | "budget"
    certificate: Optional[tuple[int, ...]]


@dataclass(frozen=True)
class CycleSpectrum:
    n: int
    ell_max: int
    records: tuple[CycleRecord, ...]

    def status(self, ell: int) -> str:
        return self.records[ell - 3].status

    def present_lengths(self) -> list[int]:
        return [r.ell for r in self.records if r.status == "present"]

    def first_absent(self) -> Optional[int]:
        for r in self.records:
            if r.status == "absent":
                return r.ell
        return None


def cycle_spectrum(g: Graph, ell_max: Optional[int] = None,
                   budget: int = DEFAULT_BUDGET) -> CycleSpectrum:
    """Presence of each cycle length 3..ell_max.

    Uses the constructive hub-forest path when the structure is recognized
    (no search, no budget outcomes); otherwise runs `find_cycle` per length
    with `budget` node expansions each, recording "budget" for lengths the
    search could not settle.
    """
    if ell_max is None:
        ell_max = g.n
    if ell_max > g.n:
        raise ValueError(f"ell_max {ell_max} exceeds vertex count {g.n}")
    records = []
    hub = recognize_hub_forest(g)
    for ell in range(3, ell_max + 1):
        if hub is not None:
            cyc = hub_forest_cycle(hub[0], hub[1], hub[2], ell)
            if cyc is not None:
                validate_cycle(g, cyc)
                records.append(CycleRecord(ell, "present", tuple(cyc)))
            else:
                records.append(CycleRecord(ell, "absent", None))
            continue
        try:
            cyc = find_cycle(g, ell, budget)
        except SearchBudgetExceeded:
            records.append(CycleRecord(ell, "budget", None))
            continue
        if cyc is None:
            records.append(CycleRecord(ell, "absent", None))
        else:
            records.append(CycleRecord(ell, "present", tuple(cyc)))
    return CycleSpectrum(g.n, ell_max, tuple(records))


def in_gnk(g: Graph, k: int,
           budget: int = DEFAULT_BUDGET) -> tuple[bool, Optional[int]]:
    """Does g miss some cycle length in [3, n-k]? (planar inputs only)

    Returns (member, witness): witness is the smallest missing length when
    member is True. Non-planar input is rejected; a budget outcome at any
    length that could still be the witness raises SearchBudgetExceeded.
    """
    if not 0 <= k <= g.n - 3:
        raise ValueError(f"need 0 <= k <= n-3 = {g.n - 3}, got k={k}")
    if not is_planar(g):
        raise ValueError("membership is defined for planar graphs only")
    spec = cycle_spectrum(g, ell_max=g.n - k, budget=budget)
    for rec in spec.records:
        if rec.status == "absent":
            return True, rec.ell
        if rec.status == "budget":
            raise SearchBudgetExceeded(rec.ell, budget)
    return False, None
