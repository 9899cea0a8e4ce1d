"""Linear forests, hub joins, and the family enumeration."""

import random

import pytest

from spexplanar import (LinearForest, build_linear_forest, complete_bipartite,
                        count_lna, enumerate_lna, extremal_graph, from_edges,
                        is_planar, join, join_with_paths, k2_join, path_graph)

import oracles


def test_linear_forest_normalizes_part_order():
    lf = LinearForest((1, 4, 2))
    assert lf.parts == (4, 2, 1)
    assert lf.order == 7
    assert lf.size == 4  # 7 vertices minus 3 paths
    assert lf.two_largest() == (4, 2)
    assert LinearForest((5,)).two_largest() == (5, 0)


def test_linear_forest_rejects_bad_parts():
    with pytest.raises(ValueError, match="at least one part"):
        LinearForest(())
    with pytest.raises(ValueError, match=">= 1"):
        LinearForest((3, 0))


def test_build_linear_forest_layout():
    g = build_linear_forest([3, 1])
    assert g.n == 4
    assert list(g.edges()) == [(0, 1), (1, 2)]
    # input order is irrelevant: parts are laid out sorted
    assert build_linear_forest([1, 3]) == g


def test_join_with_paths_keeps_given_block_order():
    g = join_with_paths([1, 2], dominating_edge=False)
    # block 0 is the singleton at vertex 2; the P2 occupies 3,4
    assert g.has_edge(3, 4) and not g.has_edge(2, 3)
    assert not g.has_edge(0, 1)
    assert g.edge_count() == 1 + 2 * 3
    assert join_with_paths([1, 2], dominating_edge=True).edge_count() == 8


def test_join_with_paths_rejects_empty_part():
    with pytest.raises(ValueError, match=">= 1"):
        join_with_paths([3, 0])


def test_k2_join_matches_generic_join():
    for parts in [(3, 1), (2, 2), (5,), (1, 1, 1)]:
        expected = join(from_edges(2, [(0, 1)]), build_linear_forest(parts))
        assert k2_join(parts) == expected


def test_k2_join_all_singletons_is_complete_bipartite():
    assert k2_join([1] * 9, dominating_edge=False) == complete_bipartite(2, 9)


def test_k2_join_is_planar_both_ways():
    for parts in [(10, 3, 2), (1,) * 12, (40,)]:
        assert is_planar(k2_join(parts, dominating_edge=True))
        assert is_planar(k2_join(parts, dominating_edge=False))


def test_extremal_graph_shape_and_edge_count():
    assert extremal_graph(8, 0) == k2_join([4, 1, 1])
    for n, k in [(7, 0), (8, 0), (20, 0), (10, 1), (25, 1), (13, 2), (40, 2)]:
        g = extremal_graph(n, k)
        assert g.n == n
        # hub edge + forest edges (n-5) + two full join stars
        assert g.edge_count() == 3 * n - 8
        assert is_planar(g)


def test_extremal_graph_preconditions():
    with pytest.raises(ValueError, match="k must be >= 0"):
        extremal_graph(10, -1)
    with pytest.raises(ValueError, match="3k\\+7 = 10"):
        extremal_graph(9, 1)


def test_enumerate_lna_frozen_examples():
    assert [lf.parts for lf in enumerate_lna(6, 1)] == [(3, 1), (2, 2)]
    assert [lf.parts for lf in enumerate_lna(8, 2)] == [
        (4, 1, 1), (3, 2, 1), (2, 2, 2)]
    assert [lf.parts for lf in enumerate_lna(10, 0)] == [(8,)]


def test_enumerate_lna_order_and_shape():
    for n, a in [(12, 2), (15, 3), (20, 4)]:
        seen = [lf.parts for lf in enumerate_lna(n, a)]
        assert len(seen) == len(set(seen))
        for parts in seen:
            assert sum(parts) == n - 2
            assert len(parts) == a + 1
            assert all(parts[i] >= parts[i + 1] for i in range(a))
        # reverse-lexicographic: each partition strictly precedes the next
        assert all(seen[i] > seen[i + 1] for i in range(len(seen) - 1))
        assert seen[0] == (n - 2 - a,) + (1,) * a


def test_enumerate_lna_preconditions():
    with pytest.raises(ValueError, match="a must be >= 0"):
        list(enumerate_lna(10, -1))
    with pytest.raises(ValueError, match="n >= a\\+3"):
        list(enumerate_lna(5, 3))


def test_count_lna_matches_partition_recurrence():
    for n in range(4, 41, 3):
        for a in range(0, 5):
            if n < a + 3:
                continue
            assert count_lna(n, a) == oracles.partition_count(n - 2, a + 1)


def test_enumerate_lna_matches_brute_force_sets():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(6, 18)
        a = rng.randint(1, min(4, n - 3))
        mine = {lf.parts for lf in enumerate_lna(n, a)}
        brute = set(oracles.partitions_exact(n - 2, a + 1))
        assert mine == brute


def test_path_graph_edge_chain():
    assert list(path_graph(4).edges()) == [(0, 1), (1, 2), (2, 3)]
    assert path_graph(1).edge_count() == 0
