"""Inequality checks: reports, margins, guards, determinism, reruns."""

import json
import math
import random

import pytest

from spexplanar import (admissible_forests, argmax_sweep, enumerate_lna,
                        from_graph6, lemma1_sweep, lemma2_sweep,
                        merge_threshold, recognize_hub_forest, reports_to_csv,
                        rerun, resolve_workers, spectral_radius,
                        verify_claim33, verify_entry_bounds, verify_lemma1,
                        verify_lemma2)
from spexplanar.families import join_with_paths
from spexplanar.verify import entry_bounds_sample

import oracles


# --- lemma1 -------------------------------------------------------------------


def test_lemma1_worked_example():
    rep = verify_lemma1(40, 2, 1, [34, 2, 2], [36, 2])
    assert rep.check_id == "lemma1"
    assert rep.holds == "certified"
    assert 0.02 < rep.margins["rho_gap"] < 0.04
    assert rep.margins["rho_l2"] > rep.margins["rho_l1"]
    assert rep.params["dominating_edge"] is False
    g1 = from_graph6(rep.artifacts["join_l1"])
    g2 = from_graph6(rep.artifacts["join_l2"])
    assert g1.n == 40 and g2.n == 40
    assert not g1.has_edge(0, 1)  # hubs are not adjacent in this check


def test_lemma1_preconditions():
    with pytest.raises(ValueError, match="a1 <= sqrt"):
        verify_lemma1(40, 3, 1, [33, 2, 2, 1], [36, 2])
    with pytest.raises(ValueError, match="a2 < a1"):
        verify_lemma1(40, 1, 1, [36, 2], [36, 2])
    with pytest.raises(ValueError, match="l1 has order"):
        verify_lemma1(40, 2, 1, [30, 2, 2], [36, 2])
    with pytest.raises(ValueError, match="l2 has 3 parts"):
        verify_lemma1(40, 2, 1, [34, 2, 2], [34, 2, 2])
    with pytest.raises(ValueError, match="n >= 4"):
        verify_lemma1(3, 1, 0, [1, 1], [1])


def test_lemma1_sweep_certifies_every_family_pair():
    reports = lemma1_sweep(40)
    # sqrt(76)/4 = 2.17..: families a = 0, 1, 2 -> pairs (1,0), (2,0), (2,1)
    assert [(r.params["a1"], r.params["a2"]) for r in reports] == [
        (1, 0), (2, 0), (2, 1)]
    for rep in reports:
        assert rep.holds == "certified"
        assert rep.margins["min_pair_gap"] > 1e-10
        n_a1 = oracles.partition_count(38, rep.params["a1"] + 1)
        n_a2 = oracles.partition_count(38, rep.params["a2"] + 1)
        assert rep.params["pairs"] == n_a1 * n_a2


# --- lemma2 and the merge machinery -------------------------------------------


def test_merge_threshold():
    assert merge_threshold(0) == 259
    assert merge_threshold(1) == 515
    assert merge_threshold(2) == 1027


def test_lemma2_symmetric_split():
    rep = verify_lemma2(300, 0, 149, 149)
    assert rep.holds == "certified"
    assert rep.margins["rho_gap"] > 0
    assert rep.margins["rho_after"] > rep.margins["rho_before"]
    # the swap lower bound is a Rayleigh-quotient statement: may be tiny
    # but never meaningfully negative
    assert rep.margins["swap_lower_bound"] >= -2e-11
    assert rep.params["t1"] + rep.params["t2"] == 1  # k+1 pieces


def test_lemma2_swap_graph_is_the_merged_join():
    # the cut-and-glue surgery must produce exactly the merged part profile
    from spexplanar.verify import _apply_chain_swap, _pick_swap_indices
    g = join_with_paths([149, 149], dominating_edge=True)
    res = spectral_radius(g)
    from spexplanar.verify import _chain_indices
    c1, c2 = _chain_indices(149)
    t1, t2 = _pick_swap_indices(0, res.vector, c1, c2)
    swapped = _apply_chain_swap(g, 149, t1, t2)
    got = recognize_hub_forest(swapped)
    assert got is not None
    assert sorted(len(p) for p in got[2]) == [1, 297]


def test_lemma2_threshold_guard_and_force():
    with pytest.raises(ValueError, match="2\\^\\(k\\+8\\)\\+3 = 259"):
        verify_lemma2(100, 0, 49, 49)
    rep = verify_lemma2(100, 0, 49, 49, force=True)
    assert rep.params["outside_hypothesis"] is True
    assert rep.holds in ("certified", "indeterminate", "violated")


def test_lemma2_preconditions():
    with pytest.raises(ValueError, match="n1 >= n2 >= k\\+2"):
        verify_lemma2(300, 0, 200, 1)
    with pytest.raises(ValueError, match="exceeds n-2"):
        verify_lemma2(300, 0, 250, 250)
    with pytest.raises(ValueError, match="residual forest order"):
        verify_lemma2(300, 0, 100, 100, (50,))
    with pytest.raises(ValueError, match="k must be >= 0"):
        verify_lemma2(300, -1, 149, 149)


def test_lemma2_with_residual_forest():
    rep = verify_lemma2(300, 0, 140, 140, (18,))
    assert rep.holds == "certified"
    assert rep.params["l"] == [18]
    before = from_graph6(rep.artifacts["join_before"])
    assert before.n == 300 and before.has_edge(0, 1)


# --- claim33 ------------------------------------------------------------------


def test_claim33_symmetric_split():
    rep, wits = verify_claim33(300, 0, 149, 149)
    assert rep.holds == "certified"
    assert rep.params["checked"] == 7  # 2 step bands + 1 cross + 4 strict
    assert rep.params["skipped"] == 0
    kinds = [(w.kind, w.label) for w in wits]
    assert kinds == [("A", "chain1"), ("A", "chain2"), ("B", "cross")]
    assert all(w.contained for w in wits)
    # identical chains: the cross difference is exactly zero by symmetry
    cross = wits[-1]
    assert cross.value == 0.0
    assert cross.lo < 0.0 < cross.hi
    assert rep.margins["min_band_slack"] > 0
    for name in ("chain1_step_i1", "chain1_over_chain2_i1",
                 "chain2_step_i1", "chain2_over_chain1_i1"):
        assert rep.margins[name] > 0


def test_claim33_short_chain_guards():
    # n2 = 2: a two-vertex chain has no interior step, and its entries are
    # forced equal by the swap symmetry, so those indices are skipped
    rep, wits = verify_claim33(300, 0, 296, 2)
    assert rep.holds == "certified"
    assert rep.params["checked"] == 4
    assert rep.params["skipped"] == 3
    assert [(w.kind, w.label) for w in wits] == [("A", "chain1"),
                                                 ("B", "cross")]
    assert all(w.contained for w in wits)
    assert "chain2_step_i1" not in rep.margins
    assert "chain2_over_chain1_i1" not in rep.margins
    assert rep.margins["chain1_step_i1"] > 0


def test_claim33_forced_equal_tail_entries():
    # the two vertices of a P2 chain are swapped by an automorphism; the
    # deterministic iteration preserves that equality bit for bit
    g = join_with_paths([296, 2], dominating_edge=True)
    x = spectral_radius(g).vector
    assert x[1 + 296 + 1] == x[1 + 296 + 2]


def test_claim33_witness_dict_shape():
    _, wits = verify_claim33(300, 0, 200, 98)
    d = wits[0].as_dict()
    assert set(d) == {"i", "label", "kind", "value", "lo", "hi", "contained"}
    json.dumps(d)  # must be serializable as-is


def test_claim33_interval_geometry():
    rep, wits = verify_claim33(300, 0, 150, 148)
    rho = rep.margins["rho"]
    for w in wits:
        half = 8.0 * 2.0 ** w.i / rho ** 2
        if w.kind == "A":
            assert w.lo == pytest.approx(2.0 / rho - half)
            assert w.hi == pytest.approx(2.0 / rho + half)
        else:
            assert w.lo == pytest.approx(-half)
            assert w.hi == pytest.approx(half)


def test_lemma2_sweep_interleaves_reports():
    reports = lemma2_sweep(20, 0, force=True)
    # splits of 18: n2 = 2..9
    assert len(reports) == 16
    assert [r.check_id for r in reports[:4]] == [
        "lemma2", "claim33", "lemma2", "claim33"]
    assert all(r.params["outside_hypothesis"] for r in reports)
    splits = [(r.params["n1"], r.params["n2"]) for r in reports
              if r.check_id == "lemma2"]
    assert splits == [(16, 2), (15, 3), (14, 4), (13, 5),
                      (12, 6), (11, 7), (10, 8), (9, 9)]


# --- entry bounds --------------------------------------------------------------


def test_entry_bounds_complete_bipartite_case():
    rep = verify_entry_bounds(20, [1] * 18)
    assert rep.holds == "certified"
    assert rep.margins["rho"] == pytest.approx(6.0, abs=1e-9)
    # all-singleton forest sits exactly on the lower bound 2/rho
    assert abs(rep.margins["lower_slack"]) < 1e-9
    assert rep.margins["upper_slack"] > 0
    assert rep.margins["hub_dev"] <= 1e-11


def test_entry_bounds_mixed_forest():
    rep = verify_entry_bounds(50, [24, 12, 12])
    assert rep.holds == "certified"
    assert rep.params["dominating_edge"] is False
    assert rep.margins["lower_slack"] >= -1e-11
    assert rep.margins["upper_slack"] >= -1e-11


def test_entry_bounds_fails_when_rho_is_small():
    # at tiny orders the interior of a P3 outweighs the hubs: the bound
    # statement needs large rho and must report the failure honestly
    rep = verify_entry_bounds(5, [3])
    assert rep.holds == "violated"
    assert rep.margins["hub_dev"] > 1e-11


def test_entry_bounds_preconditions():
    with pytest.raises(ValueError, match="forest order"):
        verify_entry_bounds(20, [5, 5])
    with pytest.raises(ValueError, match="n >= 4"):
        verify_entry_bounds(3, [1])


def test_entry_bounds_sample_is_deterministic():
    a = entry_bounds_sample(5, 20, 40, seed=7)
    b = entry_bounds_sample(5, 20, 40, seed=7)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]
    assert len(a) == 5
    assert all(20 <= r.params["n"] <= 40 for r in a)


# --- argmax sweep ---------------------------------------------------------------


def test_admissible_forests_against_brute_force():
    for n, k in [(10, 0), (12, 1), (20, 0), (30, 2)]:
        mine = admissible_forests(n, k, 3)
        brute = []
        for t in (1, 2, 3):
            for parts in sorted(oracles.partitions_exact(n - 2, t),
                                reverse=True):
                n1, n2 = parts[0], (parts[1] if t > 1 else 0)
                if n1 + n2 <= n - k - 3:
                    brute.append(parts)
        assert mine == brute


def test_admissible_forests_at_the_sweep_point():
    cands = admissible_forests(259, 0, 3)
    assert len(cands) == 5504
    assert cands[0] == (255, 1, 1)
    assert cands[-1] == (86, 86, 85)
    assert all(len(c) == 3 for c in cands)  # 1- and 2-part lists can't fit


def test_argmax_sweep_small_forced():
    result = argmax_sweep(30, 0, 3, force=True)
    rep = result.report
    assert rep.check_id == "argmax"
    assert rep.params["outside_hypothesis"] is True
    assert rep.params["candidates"] == len(result.rows)
    assert [r[0] for r in result.rows] == admissible_forests(30, 0, 3)
    assert tuple(rep.params["argmax"]) == max(
        result.rows, key=lambda r: r[1])[0]
    assert rep.margins["runner_up_gap"] > 0
    jsonl = result.rows_jsonl().strip().split("\n")
    assert len(jsonl) == len(result.rows)
    assert json.loads(jsonl[0])["parts"] == list(result.rows[0][0])
    csv = result.rows_csv().strip().split("\n")
    assert csv[0] == "parts,rho,residual,iterations"
    assert len(csv) == len(result.rows) + 1


def test_argmax_sweep_preconditions():
    with pytest.raises(ValueError, match="max_parts"):
        argmax_sweep(259, 0, 2)
    with pytest.raises(ValueError, match="2\\^\\(k\\+8\\)\\+3"):
        argmax_sweep(30, 0, 3)
    with pytest.raises(ValueError, match="no admissible forests"):
        argmax_sweep(4, 0, 3, force=True)


def test_resolve_workers_env_cap(monkeypatch):
    monkeypatch.setenv("SPEX_THREADS", "2")
    assert resolve_workers(8) == 2
    assert resolve_workers(1) == 1
    monkeypatch.setenv("SPEX_THREADS", "junk")
    assert resolve_workers(3) == 3
    monkeypatch.delenv("SPEX_THREADS")
    assert resolve_workers(5) == 5


# --- report plumbing -------------------------------------------------------------


def test_reports_reproduce_byte_for_byte():
    reports = [
        verify_lemma1(40, 2, 1, [34, 2, 2], [36, 2]),
        verify_lemma2(300, 0, 160, 138),
        verify_claim33(300, 0, 160, 138)[0],
        verify_entry_bounds(30, [14, 10, 4]),
        lemma1_sweep(40)[1],
        verify_lemma2(40, 0, 19, 19, force=True),
        argmax_sweep(30, 0, 3, force=True).report,
    ]
    for rep in reports:
        assert rerun(rep).to_json() == rep.to_json(), rep.check_id


def test_rerun_rejects_unknown_kind():
    rep = verify_entry_bounds(20, [18])
    bogus = type(rep)(check_id="wat", params={}, holds="certified",
                      margins={}, artifacts={}, tol=1e-12)
    with pytest.raises(ValueError, match="cannot rerun"):
        rerun(bogus)


def test_report_json_shape():
    rep = verify_entry_bounds(20, [18])
    blob = json.loads(rep.to_json())
    assert set(blob) == {"check_id", "params", "holds", "margins",
                         "artifacts", "tol"}
    assert blob["tol"] == 1e-12
    assert math.isfinite(blob["margins"]["rho"])


def test_reports_to_csv_layout():
    reports = [verify_entry_bounds(20, [18]),
               verify_lemma1(40, 1, 0, [36, 2], [38])]
    text = reports_to_csv(reports)
    lines = text.strip().split("\n")
    assert lines[0] == "check_id,instance,margin,value,holds"
    n_margins = sum(len(r.margins) for r in reports)
    assert len(lines) == 1 + n_margins
    assert lines[1].startswith("entry_bounds,")
    # instance text never smuggles a comma into the csv
    assert all(ln.count(",") == 4 for ln in lines[1:])


def test_rho_cache_consistency_between_checks():
    # lemma2's "before" join and claim33's join are the same graph: the
    # reported rho values must agree to the tolerance scale
    r2 = verify_lemma2(300, 0, 170, 128)
    r3, _ = verify_claim33(300, 0, 170, 128)
    assert r2.margins["rho_before"] == pytest.approx(
        r3.margins["rho"], abs=1e-10)
