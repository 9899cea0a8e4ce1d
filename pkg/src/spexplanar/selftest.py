"""Built-in example suite: small exact cases with hand-checkable answers.

`spex selftest` runs these. Each check is a plain function returning
nothing (pass) or raising AssertionError (fail); no tolerance knobs, the
expected values are exact or generous.
"""

from __future__ import annotations

import math

from .cycles import (cycle_spectrum, find_cycle, in_gnk,
                     join_cycle_certificate)
from .families import (LinearForest, build_linear_forest, complete_bipartite,
                       complete_graph, cycle_graph, enumerate_lna,
                       extremal_graph, k2_join, path_graph)
from .graphs import (Graph6Error, VertexSubsetPair, from_edges, from_graph6,
                     is_planar, join, planar_bounds_check, to_graph6, union)
from .spectral import (certify_strict, closed_form_rho, rayleigh_quotient,
                       spectral_radius, surgery_compare,
                       DisconnectedGraphError)


def check_from_edges():
    g = from_edges(2, [(0, 1)])
    assert g.degree(0) == 1 and g.degree(1) == 1
    p3 = from_edges(3, [(0, 1), (1, 2)])
    assert p3.adj == ((1,), (0, 2), (1,))
    try:
        from_edges(3, [(0, 3)])
    except ValueError as exc:
        assert "(0, 3)" in str(exc)
    else:
        raise AssertionError("out-of-range edge accepted")


def check_union_join():
    u = union(path_graph(2), path_graph(3))
    assert u.n == 5 and set(u.edges()) == {(0, 1), (2, 3), (3, 4)}
    j = join(complete_graph(2), build_linear_forest([4, 1, 1]))
    assert j.n == 8 and j.edge_count() == 1 + 3 + 12


def check_graph6():
    assert to_graph6(complete_graph(2)) == "A_"
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(path_graph(3)) == "Bg"
    for g in (path_graph(7), cycle_graph(5), extremal_graph(9, 0)):
        assert from_graph6(to_graph6(g)) == g
    try:
        from_graph6("A?x")
    except Graph6Error as exc:
        assert exc.offset >= 1
    else:
        raise AssertionError("trailing bytes accepted")


def check_planarity():
    assert is_planar(complete_graph(4))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert is_planar(extremal_graph(12, 1))


def check_planar_bounds():
    g = extremal_graph(8, 0)
    rep = planar_bounds_check(
        g, VertexSubsetPair((0, 1, 2, 3), (4, 5, 6)))
    assert rep.holds
    assert rep.e_x <= rep.x_bound


def check_forests():
    lf = LinearForest((1, 2, 1))
    assert lf.parts == (2, 1, 1) and lf.order == 4 and lf.size == 1
    fams = [list(f.parts) for f in enumerate_lna(6, 1)]
    assert fams == [[3, 1], [2, 2]]
    fams = [list(f.parts) for f in enumerate_lna(8, 2)]
    assert fams == [[4, 1, 1], [3, 2, 1], [2, 2, 2]]


def check_extremal():
    g = extremal_graph(8, 0)
    assert g.n == 8 and g.edge_count() == 3 * 8 - 8
    try:
        extremal_graph(9, 1)
    except ValueError as exc:
        assert "3k+7" in str(exc)
    else:
        raise AssertionError("undersized extremal accepted")


def check_closed_forms():
    assert closed_form_rho("complete", 5) == 4.0
    assert closed_form_rho("cycle", 9) == 2.0
    assert closed_form_rho("complete_bipartite", 2, 8) == 4.0
    assert abs(closed_form_rho("path", 2) - 1.0) < 1e-15
    assert abs(closed_form_rho("path", 3) - math.sqrt(2)) < 1e-15


def check_power_iteration():
    res = spectral_radius(cycle_graph(5))
    assert abs(res.rho - 2.0) < 1e-9
    assert max(res.vector) == 1.0
    assert spectral_radius(from_edges(1, [])).rho == 0.0
    try:
        spectral_radius(build_linear_forest([2, 2]))
    except DisconnectedGraphError:
        pass
    else:
        raise AssertionError("disconnected input accepted")


def check_rayleigh():
    assert rayleigh_quotient(complete_graph(2), [1.0, 1.0]) == 1.0
    g = cycle_graph(4)
    assert abs(rayleigh_quotient(g, [1, 1, 1, 1]) - 2.0) < 1e-15


def check_surgery():
    g = cycle_graph(4)
    gp = from_edges(4, list(g.edges()) + [(0, 2)])
    rep = surgery_compare(g, gp)
    assert rep.bound_holds and rep.rho_gp > rep.rho_g


def check_certify():
    assert certify_strict(1e-3, 1e-12, 1e-12) == "certified"
    assert certify_strict(1e-12, 1e-12, 1e-12) == "indeterminate"
    assert certify_strict(-1e-3, 1e-12, 1e-12) == "violated"


def check_find_cycle():
    assert find_cycle(cycle_graph(6), 6) == [0, 1, 2, 3, 4, 5]
    assert find_cycle(cycle_graph(6), 4) is None
    spec = cycle_spectrum(complete_graph(4))
    assert spec.present_lengths() == [3, 4]


def check_certificates():
    assert join_cycle_certificate([2, 1], 5) == [0, 2, 3, 1, 4]
    assert join_cycle_certificate([4, 1, 1], 3) == [0, 2, 1]
    assert join_cycle_certificate([4, 1, 1], 9) is None


def check_spectrum_fast_path():
    spec = cycle_spectrum(extremal_graph(8, 0))
    assert spec.present_lengths() == [3, 4, 5, 6, 7]
    assert spec.status(8) == "absent"


def check_membership():
    assert in_gnk(extremal_graph(8, 0), 0) == (True, 8)
    assert in_gnk(cycle_graph(6), 0) == (True, 3)
    assert in_gnk(k2_join([6]), 0) == (False, None)


CHECKS = [
    check_from_edges,
    check_union_join,
    check_graph6,
    check_planarity,
    check_planar_bounds,
    check_forests,
    check_extremal,
    check_closed_forms,
    check_power_iteration,
    check_rayleigh,
    check_surgery,
    check_certify,
    check_find_cycle,
    check_certificates,
    check_spectrum_fast_path,
    check_membership,
]


def run(verbose: bool = False) -> int:
    failed = 0
    for fn in CHECKS:
        name = fn.__name__.removeprefix("check_")
        try:
            fn()
        except Exception as exc:  # report and keep going
            failed += 1
            print(f"FAIL - {name}: {exc}")
        else:
            if verbose:
                print(f"ok - {name}")
    print(f"{len(CHECKS) - failed}/{len(CHECKS)} checks passed")
    return 1 if failed else 0
