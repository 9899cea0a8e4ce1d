"""Inequality checks and parameter sweeps over hub-join families.

Every check returns a VerificationReport whose `holds` field is one of
"certified", "violated", or "indeterminate". A strict inequality is only
certified when the computed difference clears the margin rule from the
spectral engine (10x the summed tolerances); differences inside that band
are indeterminate. Reports are plain data: re-running a check with the
recorded params and tol reproduces the report byte for byte.

The checks, by what they establish:

* lemma1   — among hub joins (hubs NOT adjacent) over linear forests of a
             fixed order, moving to a family with fewer parts strictly
             raises the spectral radius.
* lemma2   — with hubs adjacent, merging the two leading paths into one
             path of their combined order minus a fixed tail, plus that
             tail, strictly raises the spectral radius.
* claim33  — scaled Perron-entry differences along the two leading paths
             of the pre-merge join lie in explicit geometric intervals,
             with the strict monotonicity consequences.
* entry_bounds — in a hub join without the hub edge, every forest entry of
             the max-normalized Perron vector lies in
             [2/rho, 2/rho + 8/rho^2] and the hubs carry the max entry 1.
* argmax   — exhaustive sweep of admissible forests (two largest parts
             leave room for the forced cycle length): the conjectured
             head-plus-two-tails forest maximizes rho.

Interval-check indices are guarded by chain length: a difference interval
at index i is derived from the eigenvalue recurrence at interior vertices,
so it is only asserted when the chain extends past i+1 (and the cross
difference only when the second chain has at least 2i vertices). The
report counts any indices skipped by these guards.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import os
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .families import LinearForest, enumerate_lna, join_with_paths
from .graphs import Graph, from_edges, to_graph6
from .spectral import (DEFAULT_TOL, certify_strict, rayleigh_quotient,
                       spectral_radius)

_WORST = {"certified": 0, "indeterminate": 1, "violated": 2}
_RANK = ["certified", "indeterminate", "violated"]


@dataclass(frozen=True)
class IntervalWitness:
    """One scaled entry-difference and the interval that must contain it."""

    i: int
    value: float
    lo: float
    hi: float
    kind: str   # "A" (positive band) or "B" (symmetric band)
    label: str  # "chain1" | "chain2" | "cross"
    contained: bool

    def as_dict(self) -> dict:
        return {
            "i": self.i, "label": self.label, "kind": self.kind,
            "value": self.value, "lo": self.lo, "hi": self.hi,
            "contained": self.contained,
        }


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    params: dict
    holds: str
    margins: dict
    artifacts: dict
    tol: float

    def to_json(self) -> str:
        return json.dumps({
            "check_id": self.check_id,
            "params": self.params,
            "holds": self.holds,
            "margins": self.margins,
            "artifacts": self.artifacts,
            "tol": self.tol,
        }, separators=(",", ":"))


def _combine(*states: str) -> str:
    return _RANK[max(_WORST[s] for s in states)] if states else "certified"


def reports_to_csv(reports: Iterable[VerificationReport]) -> str:
    """Long-format margin table: one row per (report, margin)."""
    lines = ["check_id,instance,margin,value,holds"]
    for rep in reports:
        inst = " ".join(f"{k}={v}" for k, v in rep.params.items()
                        if not isinstance(v, (list, dict)))
        inst = inst.replace(",", ";")
        for name, value in rep.margins.items():
            lines.append(f"{rep.check_id},{inst},{name},{value!r},{rep.holds}")
        if not rep.margins:
            lines.append(f"{rep.check_id},{inst},,,{rep.holds}")
    return "\n".join(lines) + "\n"


# --- lemma1: family ordering under the part count ---------------------------


def _a_limit(n: int) -> float:
    return math.sqrt(2 * n - 4) / 4.0


def _check_lna(n: int, a: int, parts: Sequence[int], name: str) -> LinearForest:
    lf = LinearForest(tuple(parts))
    if lf.order != n - 2:
        raise ValueError(
            f"{name} has order {lf.order}, need n-2 = {n - 2}")
    if len(lf.parts) != a + 1:
        raise ValueError(
            f"{name} has {len(lf.parts)} parts, need a+1 = {a + 1}")
    return lf


def verify_lemma1(n: int, a1: int, a2: int, l1: Sequence[int],
                  l2: Sequence[int], tol: float = DEFAULT_TOL) -> VerificationReport:
    """Certify rho(join(L2)) > rho(join(L1)) for forests with a2 < a1 parts-1.

    Joins are built without the hub edge. Preconditions: n >= 4,
    0 <= a2 < a1 <= sqrt(2n-4)/4, and Li must be an order-(n-2) forest with
    exactly ai+1 parts.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not 0 <= a2 < a1:
        raise ValueError(f"need 0 <= a2 < a1, got a1={a1}, a2={a2}")
    if a1 > _a_limit(n):
        raise ValueError(
            f"need a1 <= sqrt(2n-4)/4 = {_a_limit(n):.4f}, got a1={a1}")
    lf1 = _check_lna(n, a1, l1, "l1")
    lf2 = _check_lna(n, a2, l2, "l2")
    g1 = join_with_paths(lf1.parts, dominating_edge=False)
    g2 = join_with_paths(lf2.parts, dominating_edge=False)
    r1 = spectral_radius(g1, tol)
    r2 = spectral_radius(g2, tol)
    gap = r2.rho - r1.rho
    return VerificationReport(
        check_id="lemma1",
        params={"n": n, "a1": a1, "a2": a2, "l1": list(lf1.parts),
                "l2": list(lf2.parts), "dominating_edge": False},
        holds=certify_strict(gap, tol, tol),
        margins={"rho_gap": float(gap), "rho_l1": float(r1.rho),
                 "rho_l2": float(r2.rho)},
        artifacts={"join_l1": to_graph6(g1), "join_l2": to_graph6(g2)},
        tol=tol,
    )


def lemma1_sweep(n: int, tol: float = DEFAULT_TOL) -> list[VerificationReport]:
    """All-pairs family comparison at order n, one report per (a1, a2).

    Computes rho once per forest, then certifies every (L1, L2) pair in one
    shot through min-over-smaller-family minus max-over-larger-family: that
    gap lower-bounds every pairwise margin.
    """
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    a_max = int(_a_limit(n))
    fams = {}
    for a in range(a_max + 1):
        rows = []
        for lf in enumerate_lna(n, a):
            g = join_with_paths(lf.parts, dominating_edge=False)
            rows.append((spectral_radius(g, tol).rho, lf.parts))
        fams[a] = rows
    reports = []
    for a1 in range(1, a_max + 1):
        for a2 in range(a1):
            hi_rho, hi_parts = max(fams[a1])   # worst L1: largest rho
            lo_rho, lo_parts = min(fams[a2])   # worst L2: smallest rho
            gap = lo_rho - hi_rho
            g_hi = join_with_paths(hi_parts, dominating_edge=False)
            g_lo = join_with_paths(lo_parts, dominating_edge=False)
            reports.append(VerificationReport(
                check_id="lemma1_pair",
                params={"n": n, "a1": a1, "a2": a2,
                        "pairs": len(fams[a1]) * len(fams[a2]),
                        "worst_l1": list(hi_parts), "worst_l2": list(lo_parts),
                        "dominating_edge": False},
                holds=certify_strict(gap, tol, tol),
                margins={"min_pair_gap": float(gap),
                         "max_rho_l1": float(hi_rho),
                         "min_rho_l2": float(lo_rho)},
                artifacts={"worst_join_l1": to_graph6(g_hi),
                           "worst_join_l2": to_graph6(g_lo)},
                tol=tol,
            ))
    return reports


# --- lemma2 and claim33: the merge comparison and its entry intervals -------


def merge_threshold(k: int) -> int:
    return (1 << (k + 8)) + 3


def _validate_merge(n: int, k: int, n1: int, n2: int,
                    l_parts: Sequence[int], force: bool) -> bool:
    """Shared precondition checks; returns outside_hypothesis."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if not n1 >= n2 >= k + 2:
        raise ValueError(f"need n1 >= n2 >= k+2 = {k + 2}, "
                         f"got n1={n1}, n2={n2}")
    rest = n - 2 - n1 - n2
    if rest < 0:
        raise ValueError(f"n1+n2 = {n1 + n2} exceeds n-2 = {n - 2}")
    for p in l_parts:
        if p < 1:
            raise ValueError(f"residual part must be >= 1, got {p}")
    if sum(l_parts) != rest:
        raise ValueError(
            f"residual forest order {sum(l_parts)} != n-2-n1-n2 = {rest}")
    if n < merge_threshold(k):
        if not force:
            raise ValueError(
                f"need n >= 2^(k+8)+3 = {merge_threshold(k)}, got n={n} "
                f"(pass force=True to explore outside the hypothesis)")
        return True
    return False


def _chain_indices(n1: int):
    """Vertex index helpers for layout [hubs, chain1 block, chain2 block, ..]."""
    return (lambda i: 1 + i), (lambda j: 1 + n1 + j)


def _pick_swap_indices(k: int, x, c1, c2) -> tuple[int, int]:
    """Where to cut the two chains so the glued paths have the target orders.

    t1 + t2 = k + 1 always; for odd k the cut is symmetric, for even k it
    leans toward the chain with the smaller entry at depth (k+2)/2 so the
    swap's Rayleigh bound comes out nonnegative.
    """
    if k % 2 == 1:
        return (k + 1) // 2, (k + 1) // 2
    d = (k + 2) // 2
    if x[c1(d)] >= x[c2(d)]:
        return k // 2, (k + 2) // 2
    return (k + 2) // 2, k // 2


def _apply_chain_swap(g: Graph, n1: int, t1: int, t2: int) -> Graph:
    """Delete the cut edges at t1/t2 and cross-glue the chain pieces."""
    c1, c2 = _chain_indices(n1)
    edges = set(g.edges())

    def drop(u, v):
        edges.discard((min(u, v), max(u, v)))

    def add(u, v):
        edges.add((min(u, v), max(u, v)))

    if t1 >= 1:
        drop(c1(t1), c1(t1 + 1))
    if t2 >= 1:
        drop(c2(t2), c2(t2 + 1))
    if t1 >= 1 and t2 >= 1:
        add(c1(t1), c2(t2))
    add(c1(t1 + 1), c2(t2 + 1))
    return from_edges(g.n, edges)


def verify_lemma2(n: int, k: int, n1: int, n2: int,
                  l_parts: Sequence[int] = (), tol: float = DEFAULT_TOL,
                  force: bool = False) -> VerificationReport:
    """Certify that merging the two leading paths raises the spectral radius.

    Compares rho of hubs+P_{n1}+P_{n2}+L against hubs+P_{n1+n2-(k+1)}+P_{k+1}+L
    (hub edge present in both). Also records the swap-based Rayleigh lower
    bound for the gap as a diagnostic: the pre-merge Perron vector plugged
    into the post-swap graph.
    """
    outside = _validate_merge(n, k, n1, n2, l_parts, force)
    before = join_with_paths([n1, n2, *l_parts], dominating_edge=True)
    merged_parts = tuple(sorted([n1 + n2 - (k + 1), k + 1, *l_parts],
                                reverse=True))
    after = join_with_paths(merged_parts, dominating_edge=True)
    r1 = spectral_radius(before, tol)
    r2 = spectral_radius(after, tol)
    gap = r2.rho - r1.rho

    c1, c2 = _chain_indices(n1)
    t1, t2 = _pick_swap_indices(k, r1.vector, c1, c2)
    swapped = _apply_chain_swap(before, n1, t1, t2)
    rq = rayleigh_quotient(swapped, r1.vector)
    swap_bound = rq - r1.rho

    params = {"n": n, "k": k, "n1": n1, "n2": n2, "l": list(l_parts),
              "t1": t1, "t2": t2, "dominating_edge": True}
    if outside:
        params["outside_hypothesis"] = True
    return VerificationReport(
        check_id="lemma2",
        params=params,
        holds=certify_strict(gap, tol, tol),
        margins={"rho_gap": float(gap), "swap_lower_bound": float(swap_bound),
                 "rho_before": float(r1.rho), "rho_after": float(r2.rho)},
        artifacts={"join_before": to_graph6(before),
                   "join_after": to_graph6(after)},
        tol=tol,
    )


def verify_claim33(n: int, k: int, n1: int, n2: int,
                   l_parts: Sequence[int] = (), tol: float = DEFAULT_TOL,
                   force: bool = False
                   ) -> tuple[VerificationReport, list[IntervalWitness]]:
    """Interval containment for scaled Perron-entry differences.

    On the pre-merge join (hub edge present), with x max-normalized and
    rho its spectral radius, checks for each admissible index i:

      part (i):  rho^i (x[c_{i+1}] - x[c_i]) in A_i for both chains,
                 A_i = [2/rho - 8*2^i/rho^2, 2/rho + 8*2^i/rho^2]
      part (ii): rho^i (x[chain1_i] - x[chain2_i]) in B_i,
                 B_i = [-8*2^i/rho^2, 8*2^i/rho^2]

    plus the strict monotonicity consequences (entry steps beat an explicit
    positive bound; chain heads interleave). Index guards: part (i) on a
    chain of order m is checked for i <= min(floor((k+2)/2), m-2); part (ii)
    for i <= min(floor((k+3)/2), floor(n2/2)). Skipped indices are counted
    in params["skipped"].
    """
    outside = _validate_merge(n, k, n1, n2, l_parts, force)
    g = join_with_paths([n1, n2, *l_parts], dominating_edge=True)
    res = spectral_radius(g, tol)
    rho, x = res.rho, res.vector
    c1, c2 = _chain_indices(n1)

    witnesses: list[IntervalWitness] = []
    margins: dict = {"rho": float(rho)}
    states: list[str] = []
    skipped = 0
    slack_x = 10.0 * tol

    def band_state(value: float, lo: float, hi: float, slack: float) -> str:
        if value < lo - slack or value > hi + slack:
            return "violated"
        if value > lo + slack and value < hi - slack:
            return "certified"
        return "indeterminate"

    i_max_step = (k + 2) // 2
    i_max_cross = (k + 3) // 2

    for i in range(1, i_max_step + 1):
        scale = rho ** i
        half = 8.0 * (2.0 ** i) / rho ** 2
        lo, hi = 2.0 / rho - half, 2.0 / rho + half
        slack = 10.0 * tol * scale
        for label, cidx, order in (("chain1", c1, n1), ("chain2", c2, n2)):
            if order < i + 2:
                skipped += 1
                continue
            val = scale * (x[cidx(i + 1)] - x[cidx(i)])
            st = band_state(float(val), lo, hi, slack)
            states.append(st)
            witnesses.append(IntervalWitness(
                i, float(val), lo, hi, "A", label, st != "violated"))

    for i in range(1, i_max_cross + 1):
        if n2 < 2 * i:
            skipped += 1
            continue
        scale = rho ** i
        half = 8.0 * (2.0 ** i) / rho ** 2
        slack = 10.0 * tol * scale
        val = scale * (x[c1(i)] - x[c2(i)])
        st = band_state(float(val), -half, half, slack)
        states.append(st)
        witnesses.append(IntervalWitness(
            i, float(val), -half, half, "B", "cross", st != "violated"))

    # monotonicity: steps beat an explicit positive bound, heads interleave
    def strict_state(margin: float, value: float) -> str:
        if min(margin, value) > slack_x:
            return "certified"
        if min(margin, value) < -slack_x:
            return "violated"
        return "indeterminate"

    for i in range(1, i_max_step + 1):
        step_bound = 2.0 / rho ** (i + 1) - 8.0 * 2.0 ** i / rho ** (i + 2)
        cross_bound = 2.0 / rho ** (i + 1) - 16.0 * 2.0 ** i / rho ** (i + 2)
        if n1 >= i + 2:
            d = float(x[c1(i + 1)] - x[c1(i)])
            margins[f"chain1_step_i{i}"] = d - step_bound
            states.append(strict_state(d - step_bound, d))
        else:
            skipped += 1
        if n1 >= i + 2 and n2 >= 2 * i:
            d = float(x[c1(i + 1)] - x[c2(i)])
            margins[f"chain1_over_chain2_i{i}"] = d - cross_bound
            states.append(strict_state(d - cross_bound, d))
        else:
            skipped += 1
        if n2 >= i + 2:
            d = float(x[c2(i + 1)] - x[c2(i)])
            margins[f"chain2_step_i{i}"] = d - step_bound
            states.append(strict_state(d - step_bound, d))
        else:
            skipped += 1
        if n2 >= i + 2 and n2 >= 2 * i:
            d = float(x[c2(i + 1)] - x[c1(i)])
            margins[f"chain2_over_chain1_i{i}"] = d - cross_bound
            states.append(strict_state(d - cross_bound, d))
        else:
            skipped += 1

    if witnesses:
        margins["min_band_slack"] = float(min(
            min(w.value - w.lo, w.hi - w.value) for w in witnesses))

    params = {"n": n, "k": k, "n1": n1, "n2": n2, "l": list(l_parts),
              "checked": len(states), "skipped": skipped,
              "dominating_edge": True}
    if outside:
        params["outside_hypothesis"] = True
    report = VerificationReport(
        check_id="claim33",
        params=params,
        holds=_combine(*states) if states else "certified",
        margins=margins,
        artifacts={"join": to_graph6(g)},
        tol=tol,
    )
    return report, witnesses


def lemma2_sweep(n: int, k: int, tol: float = DEFAULT_TOL,
                 force: bool = False) -> list[VerificationReport]:
    """Merge + interval checks over every split n1 >= n2 >= k+2 of n-2.

    The residual forest is empty throughout (the two paths carry all of
    n-2). Returns the lemma2 and claim33 reports interleaved per split.
    """
    reports = []
    for n2 in range(k + 2, (n - 2) // 2 + 1):
        n1 = n - 2 - n2
        if n1 < n2:
            break
        reports.append(verify_lemma2(n, k, n1, n2, (), tol, force))
        rep, _ = verify_claim33(n, k, n1, n2, (), tol, force)
        reports.append(rep)
    return reports


# --- entry bounds ------------------------------------------------------------


def verify_entry_bounds(n: int, parts: Sequence[int],
                        tol: float = DEFAULT_TOL) -> VerificationReport:
    """Forest entries of the hub join (no hub edge) sit in
    [2/rho, 2/rho + 8/rho^2]; hubs carry the max entry 1."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    lf = LinearForest(tuple(parts))
    if lf.order != n - 2:
        raise ValueError(f"forest order {lf.order} != n-2 = {n - 2}")
    g = join_with_paths(lf.parts, dominating_edge=False)
    res = spectral_radius(g, tol)
    rho, x = res.rho, res.vector
    lo = 2.0 / rho
    hi = 2.0 / rho + 8.0 / rho ** 2
    slack = 10.0 * tol
    forest = x[2:]
    lower_slack = float(forest.min() - lo)
    upper_slack = float(hi - forest.max())
    hub_dev = float(max(abs(x[0] - 1.0), abs(x[1] - 1.0)))
    ok = (lower_slack >= -slack and upper_slack >= -slack
          and hub_dev <= slack)
    return VerificationReport(
        check_id="entry_bounds",
        params={"n": n, "parts": list(lf.parts), "dominating_edge": False},
        holds="certified" if ok else "violated",
        margins={"rho": float(rho), "lower_slack": lower_slack,
                 "upper_slack": upper_slack, "hub_dev": hub_dev},
        artifacts={"join": to_graph6(g)},
        tol=tol,
    )


def entry_bounds_sample(count: int, n_lo: int, n_hi: int, seed: int,
                        tol: float = DEFAULT_TOL) -> list[VerificationReport]:
    """Entry-bound checks on `count` seeded random (n, forest) draws."""
    import random
    rng = random.Random(seed)
    reports = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        remaining = n - 2
        parts = []
        while remaining:
            p = rng.randint(1, remaining)
            parts.append(p)
            remaining -= p
        reports.append(verify_entry_bounds(n, parts, tol))
    return reports


# --- argmax sweep -------------------------------------------------------------


def resolve_workers(explicit: Optional[int] = None) -> int:
    """Worker count for sweeps; the SPEX_THREADS env var caps it."""
    w = explicit if explicit and explicit > 0 else (os.cpu_count() or 1)
    cap = os.environ.get("SPEX_THREADS")
    if cap:
        try:
            w = min(w, max(1, int(cap)))
        except ValueError:
            pass
    return max(1, w)


def admissible_forests(n: int, k: int, max_parts: int) -> list[tuple[int, ...]]:
    """Forest part lists of order n-2 with <= max_parts parts whose two
    largest parts sum to at most n-k-3 (so the join misses a cycle length
    in [3, n-k]). Deterministic order: by part count, then reverse-lex."""
    out = []
    for t in range(1, max_parts + 1):
        for parts in _exact_partitions(n - 2, t):
            n1 = parts[0]
            n2 = parts[1] if t > 1 else 0
            if n1 + n2 <= n - k - 3:
                out.append(tuple(parts))
    return out


def _exact_partitions(total: int, t: int, cap: Optional[int] = None):
    if cap is None:
        cap = total
    if t == 0:
        if total == 0:
            yield []
        return
    if total < t:
        return
    hi = min(cap, total - (t - 1))
    lo = -(-total // t)
    for p in range(hi, lo - 1, -1):
        for rest in _exact_partitions(total - p, t - 1, p):
            yield [p] + rest


def _candidate_rho(args: tuple[tuple[int, ...], float]):
    parts, tol = args
    r = spectral_radius(join_with_paths(parts, dominating_edge=True), tol)
    return parts, r.rho, r.residual, r.iterations


@dataclass(frozen=True)
class ArgmaxSweepResult:
    report: VerificationReport
    rows: tuple[tuple, ...] = field(repr=False)  # (parts, rho, resid, iters)

    def rows_jsonl(self) -> str:
        lines = []
        for parts, rho, resid, iters in self.rows:
            lines.append(json.dumps({
                "parts": list(parts), "rho": rho,
                "residual": resid, "iterations": iters,
            }, separators=(",", ":")))
        return "\n".join(lines) + "\n"

    def rows_csv(self) -> str:
        lines = ["parts,rho,residual,iterations"]
        for parts, rho, resid, iters in self.rows:
            lines.append(
                f"\"{' '.join(map(str, parts))}\",{rho!r},{resid!r},{iters}")
        return "\n".join(lines) + "\n"


def argmax_sweep(n: int, k: int, max_parts: int = 3,
                 tol: float = DEFAULT_TOL, workers: Optional[int] = None,
                 force: bool = False) -> ArgmaxSweepResult:
    """Find the admissible forest maximizing rho of its hub join (hub edge
    present), and certify uniqueness of the maximum.

    Candidates within the indeterminacy margin of the best are reported as
    ties (holds = "indeterminate") rather than resolved. Rows come back in
    enumeration order regardless of worker count, so output is
    deterministic; workers default to the CPU count, capped by SPEX_THREADS.
    """
    if max_parts < 3:
        raise ValueError(f"max_parts must be >= 3, got {max_parts}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    outside = False
    if n < merge_threshold(k):
        if not force:
            raise ValueError(
                f"need n >= 2^(k+8)+3 = {merge_threshold(k)}, got n={n} "
                f"(pass force=True to explore outside the hypothesis)")
        outside = True
    cands = admissible_forests(n, k, max_parts)
    if not cands:
        raise ValueError(f"no admissible forests for n={n}, k={k}, "
                         f"max_parts={max_parts}")
    nworkers = resolve_workers(workers)
    jobs = [(parts, tol) for parts in cands]
    if nworkers > 1 and len(jobs) >= 64:
        chunk = max(1, len(jobs) // (nworkers * 8))
        with multiprocessing.get_context("fork").Pool(nworkers) as pool:
            rows = list(pool.imap(_candidate_rho, jobs, chunksize=chunk))
    else:
        rows = [_candidate_rho(job) for job in jobs]

    best = max(rows, key=lambda r: r[1])
    margin = 10.0 * (tol + tol)
    ties = [r[0] for r in rows if best[1] - r[1] <= margin]
    runner_up = max((r[1] for r in rows if r[0] != best[0]), default=-math.inf)
    expected = (n - 2 * k - 4, k + 1, k + 1)
    holds = "certified" if len(ties) == 1 else "indeterminate"
    params = {"n": n, "k": k, "max_parts": max_parts,
              "candidates": len(rows), "argmax": list(best[0]),
              "expected": list(expected),
              "matches_expected": tuple(best[0]) == expected,
              "ties": [list(t) for t in ties], "dominating_edge": True}
    if outside:
        params["outside_hypothesis"] = True
    report = VerificationReport(
        check_id="argmax",
        params=params,
        holds=holds,
        margins={"rho_max": float(best[1]),
                 "runner_up_gap": float(best[1] - runner_up)},
        artifacts={"argmax_join": to_graph6(
            join_with_paths(best[0], dominating_edge=True))},
        tol=tol,
    )
    return ArgmaxSweepResult(report, tuple(rows))


# --- re-running reports --------------------------------------------------------


def rerun(report: VerificationReport) -> VerificationReport:
    """Recompute a report from its own recorded params at its recorded tol.

    Certified reports must reproduce byte for byte; this is the
    self-containment contract for everything the verifier emits.
    """
    p = report.params
    force = bool(p.get("outside_hypothesis", False))
    if report.check_id == "lemma1":
        return verify_lemma1(p["n"], p["a1"], p["a2"], p["l1"], p["l2"],
                             report.tol)
    if report.check_id == "lemma2":
        return verify_lemma2(p["n"], p["k"], p["n1"], p["n2"], tuple(p["l"]),
                             report.tol, force)
    if report.check_id == "claim33":
        rep, _ = verify_claim33(p["n"], p["k"], p["n1"], p["n2"],
                                tuple(p["l"]), report.tol, force)
        return rep
    if report.check_id == "entry_bounds":
        return verify_entry_bounds(p["n"], p["parts"], report.tol)
    if report.check_id == "lemma1_pair":
        for rep in lemma1_sweep(p["n"], report.tol):
            if rep.params["a1"] == p["a1"] and rep.params["a2"] == p["a2"]:
                return rep
        raise ValueError(f"pair (a1={p['a1']}, a2={p['a2']}) not in sweep")
    if report.check_id == "argmax":
        return argmax_sweep(p["n"], p["k"], p["max_parts"], report.tol,
                            force=force).report
    raise ValueError(f"cannot rerun reports of kind {report.check_id!r}")
