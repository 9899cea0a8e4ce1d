"""spex: command-line front end.

Subcommands: build, rho, spectrum, member, verify, sweep, selftest.
Exit codes: 0 success, 1 when any check reports "violated" (or a
computation refuses the input), 2 for usage errors.

Graph arguments accept, in this order of interpretation:
  * a family string:  P12  C6  K7  K2,18  k2+[4,1,1]  extremal(8,0)
  * a graph6 string
  * "-" to read stdin: an edge list ("n" line then "u v" lines) when the
    first line is an integer, otherwise graph6.

All reporting is JSON / JSON-lines on stdout; `--csv FILE` writes a
delimited margin table next to it. No plots: CSV is the boundary.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import gridconfig
from .cycles import (SearchBudgetExceeded, cycle_spectrum, in_gnk,
                     DEFAULT_BUDGET)
from .families import (build_linear_forest, extremal_graph, k2_join,
                       complete_bipartite, complete_graph, cycle_graph,
                       path_graph)
from .graphs import (Graph, Graph6Error, from_graph6, parse_edge_list,
                     format_edge_list, to_graph6)
from .spectral import (DEFAULT_TOL, ConvergenceError, DisconnectedGraphError,
                       spectral_radius)
from . import verify as V
from . import selftest as _selftest


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    subcommand: str
    tol: float = DEFAULT_TOL
    budget: int = DEFAULT_BUDGET
    out_format: str = "json"  # json | csv | text
    seed: int = 0
    args: argparse.Namespace = field(default=None, repr=False)


_FAMILY_RES = [
    (re.compile(r"[Pp](\d+)$"), lambda m: path_graph(int(m.group(1)))),
    (re.compile(r"[Cc](\d+)$"), lambda m: cycle_graph(int(m.group(1)))),
    (re.compile(r"[Kk](\d+),(\d+)$"),
     lambda m: complete_bipartite(int(m.group(1)), int(m.group(2)))),
    (re.compile(r"[Kk](\d+)$"), lambda m: complete_graph(int(m.group(1)))),
    (re.compile(r"[Kk]2\+\[(\d+(?:,\d+)*)\]$"),
     lambda m: k2_join([int(p) for p in m.group(1).split(",")])),
    (re.compile(r"extremal\((\d+),(\d+)\)$"),
     lambda m: extremal_graph(int(m.group(1)), int(m.group(2)))),
]


def parse_family(text: str) -> Optional[Graph]:
    s = text.strip()
    for rx, make in _FAMILY_RES:
        m = rx.fullmatch(s)
        if m:
            return make(m)
    return None


def load_graph(arg: str) -> Graph:
    if arg == "-":
        text = sys.stdin.read()
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        if re.fullmatch(r"\d+", first):
            return parse_edge_list(text)
        if not first:
            raise UsageError("empty graph input on stdin")
        return from_graph6(first.split()[0])
    fam = parse_family(arg)
    if fam is not None:
        return fam
    try:
        return from_graph6(arg)
    except Graph6Error as exc:
        raise UsageError(
            f"{arg!r} is neither a family string (P12, C6, K7, K2,18, "
            f"k2+[4,1,1], extremal(8,0)) nor valid graph6: {exc}") from None


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"bad part list {text!r}; want e.g. 34,2,2") from None


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _write_csv(path: Optional[str], text: str) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)


# --- subcommand handlers -----------------------------------------------------


def cmd_build(cfg: RunConfig) -> int:
    a = cfg.args
    if a.family == "extremal":
        if a.n is None:
            raise UsageError("build extremal needs --n (and optionally --k)")
        g = extremal_graph(a.n, a.k)
    elif a.family == "forest":
        if not a.parts:
            raise UsageError("build forest needs --parts p1,p2,...")
        g = build_linear_forest(_parse_parts(a.parts))
    else:
        g = load_graph(a.family)
    if a.out == "g6":
        print(to_graph6(g))
    elif a.out == "edges":
        sys.stdout.write(format_edge_list(g))
    else:
        _emit({"n": g.n, "edges": list(g.edges())})
    return 0


def cmd_rho(cfg: RunConfig) -> int:
    a = cfg.args
    g = load_graph(a.graph)
    res = spectral_radius(g, a.tol)
    if a.emit_vector is not None:
        lines = ["vertex,entry"]
        lines.extend(f"{i},{float(v)!r}" for i, v in enumerate(res.vector))
        text = "\n".join(lines) + "\n"
        if a.emit_vector == "-":
            sys.stdout.write(text)
            return 0
        with open(a.emit_vector, "w") as fh:
            fh.write(text)
    _emit({"n": g.n, "rho": res.rho, "residual": res.residual,
           "iterations": res.iterations, "tol": a.tol})
    return 0


def cmd_spectrum(cfg: RunConfig) -> int:
    a = cfg.args
    g = load_graph(a.graph)
    ell_max = a.max if a.max is not None else g.n
    spec = cycle_spectrum(g, ell_max=ell_max, budget=a.budget)
    out = []
    for rec in spec.records:
        row = {"ell": rec.ell, "status": rec.status}
        if rec.certificate is not None:
            row["certificate"] = list(rec.certificate)
        out.append(row)
    _emit(out)
    return 0


def cmd_member(cfg: RunConfig) -> int:
    a = cfg.args
    g = load_graph(a.graph)
    member, witness = in_gnk(g, a.k, budget=a.budget)
    _emit({"member": member, "witness": witness})
    return 0


def _exit_for(reports) -> int:
    return 1 if any(r.holds == "violated" for r in reports) else 0


def cmd_verify(cfg: RunConfig) -> int:
    a = cfg.args
    reports = []
    witness_lines = []
    if a.n is None and not (a.check == "entry-bounds" and not a.parts):
        raise UsageError(f"verify {a.check} needs --n")
    if a.check == "lemma1":
        if a.l1 or a.l2 or a.a1 is not None or a.a2 is not None:
            if not (a.l1 and a.l2 and a.a1 is not None and a.a2 is not None):
                raise UsageError(
                    "single lemma1 check needs --a1 --a2 --l1 --l2")
            reports.append(V.verify_lemma1(
                a.n, a.a1, a.a2, _parse_parts(a.l1), _parse_parts(a.l2),
                a.tol))
        else:
            reports.extend(V.lemma1_sweep(a.n, a.tol))
    elif a.check == "lemma2":
        if a.n1 is not None or a.n2 is not None or a.l:
            if a.n1 is None or a.n2 is None:
                raise UsageError("single lemma2 check needs both --n1 --n2")
            l = _parse_parts(a.l) if a.l else ()
            reports.append(V.verify_lemma2(
                a.n, a.k, a.n1, a.n2, l, a.tol, a.force))
        else:
            reports.extend(V.lemma2_sweep(a.n, a.k, a.tol, a.force))
    elif a.check == "claim33":
        if a.n1 is None or a.n2 is None:
            raise UsageError("claim33 needs --n1 and --n2")
        l = _parse_parts(a.l) if a.l else ()
        rep, wits = V.verify_claim33(a.n, a.k, a.n1, a.n2, l, a.tol, a.force)
        reports.append(rep)
        witness_lines.extend(w.as_dict() for w in wits)
    elif a.check == "entry-bounds":
        if a.parts:
            if any(v is not None for v in (a.count, a.n_lo, a.n_hi, a.seed)):
                raise UsageError(
                    "sampling flags apply only to the sampled run (no --parts)")
            reports.append(V.verify_entry_bounds(
                a.n, _parse_parts(a.parts), a.tol))
        else:
            if a.n is not None:
                raise UsageError(
                    "entry-bounds with --n needs --parts; "
                    "drop --n for the sampled run")
            s = gridconfig.ENTRY_BOUNDS_SAMPLE
            reports.extend(V.entry_bounds_sample(
                a.count or s["count"], a.n_lo or s["n_lo"],
                a.n_hi or s["n_hi"],
                a.seed if a.seed is not None else s["seed"], a.tol))
    for rep in reports:
        print(rep.to_json())
    for w in witness_lines:
        _emit({"witness": w})
    _write_csv(a.csv, V.reports_to_csv(reports))
    return _exit_for(reports)


def cmd_sweep(cfg: RunConfig) -> int:
    a = cfg.args
    if a.what != "argmax":
        raise UsageError(f"unknown sweep {a.what!r}; available: argmax")
    result = V.argmax_sweep(a.n, a.k, a.parts, a.tol,
                            workers=a.workers, force=a.force)
    if not a.summary_only:
        sys.stdout.write(result.rows_jsonl())
    print(result.report.to_json())
    _write_csv(a.csv, result.rows_csv())
    return _exit_for([result.report])


def cmd_selftest(cfg: RunConfig) -> int:
    return _selftest.run(verbose=True)


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spex",
        description="spectral-extremal toolkit: hub-join constructions, "
                    "Perron computation, cycle spectra, inequality sweeps")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def add_tol(p):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL,
                       help="residual tolerance (default 1e-12)")

    def add_budget(p):
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="search node budget per cycle length")

    p = sub.add_parser("build", help="construct a graph and print it")
    p.add_argument("family",
                   help="family string, or 'extremal' (with --n/--k), or "
                        "'forest' (with --parts)")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--parts")
    p.add_argument("--out", choices=("g6", "edges", "json"), default="g6")
    p.set_defaults(fn=cmd_build)

    p = sub.add_parser("rho", help="spectral radius of a graph")
    p.add_argument("graph", nargs="?", default="-")
    add_tol(p)
    p.add_argument("--emit-vector", nargs="?", const="-", default=None,
                   metavar="FILE",
                   help="write the Perron vector as CSV (default stdout)")
    p.set_defaults(fn=cmd_rho)

    p = sub.add_parser("spectrum", help="cycle spectrum of a graph")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--max", type=int, default=None,
                   help="largest length to check (default n)")
    add_budget(p)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("member",
                       help="does the graph miss a cycle length in [3, n-k]?")
    p.add_argument("graph", nargs="?", default="-")
    p.add_argument("--k", type=int, required=True)
    add_budget(p)
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("verify", help="run an inequality check")
    p.add_argument("check",
                   choices=("lemma1", "lemma2", "claim33", "entry-bounds"))
    p.add_argument("--n", type=int,
                   help="graph order (required except for the sampled "
                        "entry-bounds run)")
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--a1", type=int)
    p.add_argument("--a2", type=int)
    p.add_argument("--l1", help="parts of the first forest, e.g. 34,2,2")
    p.add_argument("--l2", help="parts of the second forest")
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--l", help="residual forest parts, e.g. 4,1")
    p.add_argument("--parts", help="forest parts for entry-bounds")
    p.add_argument("--count", type=int)
    p.add_argument("--n-lo", type=int)
    p.add_argument("--n-hi", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--force", action="store_true",
                   help="run below the order threshold; reports are "
                        "labeled outside_hypothesis")
    p.add_argument("--csv", help="also write a CSV margin table to FILE")
    add_tol(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("sweep", help="exhaustive parameter sweep")
    p.add_argument("what", help="sweep kind: argmax")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--parts", type=int, default=3,
                   help="max number of forest parts (default 3)")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (capped by SPEX_THREADS)")
    p.add_argument("--force", action="store_true")
    p.add_argument("--summary-only", action="store_true",
                   help="suppress per-candidate JSONL rows")
    p.add_argument("--csv", help="write per-candidate CSV to FILE")
    add_tol(p)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("selftest", help="run the built-in example checks")
    p.set_defaults(fn=cmd_selftest)

    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; pass both through
        return int(exc.code or 0)
    cfg = RunConfig(
        subcommand=args.subcommand,
        tol=getattr(args, "tol", DEFAULT_TOL),
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        seed=getattr(args, "seed", 0) or 0,
        args=args,
    )
    try:
        return args.fn(cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, Graph6Error) as exc:
        # precondition violations (bad parts, disconnected input, ...) are
        # argument errors; DisconnectedGraphError subclasses ValueError
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, SearchBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
