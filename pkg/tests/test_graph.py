# -*- coding: utf-8 -*-
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from core.constant import SIDE
from core.error import NotTriangular, DimensionMismatch
from core.graph import (BipartiteGraph, StarForest, Decomposition, degree_sequence, dominance_leq,
                        star_forest_embeds, triangular_order, swap_sides, verify_asd)
from core.utils.base import triangular_root, parse_csv_ints
from strategies import bipartite_graphs


def _same_length_triples():
    return st.integers(min_value=1, max_value=6).flatmap(
        lambda n: st.tuples(*[st.lists(st.integers(0, 5), min_size=n, max_size=n) for _ in range(3)]))


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, [(1, 1), (1, 1)])
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, [(3, 1)])
    with pytest.raises(ValueError):
        BipartiteGraph(2, 2, [(1, 0)])


def test_graph_accessors(starforest_only_graph):
    assert starforest_only_graph.size == 6
    assert starforest_only_graph.neighbors(3) == (1, 2, 3)
    assert starforest_only_graph.degrees(SIDE.X) == (1, 1, 3, 1)
    assert starforest_only_graph.degrees(SIDE.Y) == (2, 2, 2)
    assert degree_sequence(starforest_only_graph) == (1, 1, 1, 3)
    assert starforest_only_graph.has_edge(4, 3) and not starforest_only_graph.has_edge(4, 1)


def test_swap_sides(starforest_only_graph):
    swapped = swap_sides(starforest_only_graph)
    assert (swapped.k, swapped.m) == (3, 4)
    assert swapped.has_edge(3, 4)
    assert swap_sides(swapped) == starforest_only_graph


def test_star_forest_shape():
    with pytest.raises(ValueError):
        StarForest([(1, 1), (2, 1)])
    loose = StarForest([(1, 1), (2, 1)], strict=False)
    assert not loose.is_star_forest()
    forest = StarForest([(1, 1), (1, 2), (3, 3)])
    assert forest.centers() == (1, 3)
    assert forest.center_degrees(3) == (2, 0, 1)
    with pytest.raises(DimensionMismatch):
        forest.center_degrees(2)


def test_dominance_examples():
    assert dominance_leq((0, 1, 2), (2, 1, 1))
    assert not dominance_leq((0, 0, 3), (1, 1, 1))
    assert dominance_leq((), ())
    with pytest.raises(DimensionMismatch):
        dominance_leq((1, 2), (1, 2, 3))


def test_star_forest_embeds():
    small = StarForest([(1, 1), (2, 2)])
    big = StarForest([(3, 1), (3, 2), (1, 3)])
    assert star_forest_embeds(small, big)
    assert not star_forest_embeds(big, small)


def _star_sizes(total, largest=None):
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest or total), 0, -1):
        for rest in _star_sizes(total - first, first):
            yield (first,) + rest


def _forest(sizes):
    edges, y = [], 0
    for x, size in enumerate(sizes, start=1):
        for _ in range(size):
            y += 1
            edges.append((x, y))
    return StarForest(edges)


def _stars_fit(small, big):
    # each star of the smaller forest needs its own star of the larger one
    return any(all(s <= big[p] for s, p in zip(small, perm)) for perm in permutations(range(len(big)), len(small)))


def test_star_forest_embeds_matches_star_matching():
    shapes = [s for e in range(7) for s in _star_sizes(e)]
    assert len(shapes) == 30
    for small in shapes:
        for big in shapes:
            assert star_forest_embeds(_forest(small), _forest(big), 6) == _stars_fit(small, big), (small, big)


@given(_same_length_triples())
def test_dominance_is_a_preorder(vectors):
    a, b, c = vectors
    assert dominance_leq(a, a)
    assert dominance_leq(a, list(reversed(a)))
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert sorted(a) == sorted(b)


@pytest.mark.parametrize('e,n', [(1, 1), (3, 2), (6, 3), (10, 4), (28, 7), (0, None), (2, None), (7, None)])
def test_triangular_root(e, n):
    assert triangular_root(e) == n


def test_triangular_order_raises():
    assert triangular_order(21) == 6
    with pytest.raises(NotTriangular):
        triangular_order(8)


def test_parse_csv_ints():
    assert parse_csv_ints('4,6, 9,9') == (4, 6, 9, 9)
    assert parse_csv_ints('') == ()


def test_verify_starforest_witness(starforest_only_graph, starforest_witness):
    report = verify_asd(starforest_only_graph, starforest_witness)
    assert report.overall
    assert bool(report)
    assert [f.check for f in report.findings] == ['partition', 'triangular', 'sizes', 'star_forest', 'ascending']


def test_verify_small(small_reduced, small_decomposition):
    assert verify_asd(small_reduced, small_decomposition).overall


def test_verify_reports_every_failure(starforest_only_graph):
    bad = Decomposition([
        StarForest([(1, 1)]),
        StarForest([(3, 1), (4, 1)]),
        StarForest([(3, 3), (3, 2), (2, 2)], strict=False),
    ])
    report = verify_asd(starforest_only_graph, bad)
    assert not report.overall
    failed = {f.check: f.offending for f in report.failed()}
    # (4, 1) is foreign, (4, 3) is missing
    assert failed['partition'] == ((4, 1), (4, 3))
    assert failed['star_forest'] == (3,)
    assert set(failed) == {'partition', 'star_forest'}


def test_verify_sizes_and_ascending(starforest_only_graph):
    wrong_sizes = Decomposition([
        StarForest([(1, 1), (2, 2)]),
        StarForest([(3, 3)]),
        StarForest([(4, 3), (3, 2), (3, 1)]),
    ])
    failed = {f.check: f.offending for f in verify_asd(starforest_only_graph, wrong_sizes).failed()}
    assert failed['sizes'] == (1, 2)

    not_ascending = Decomposition([
        StarForest([(3, 3)]),
        StarForest([(3, 1), (3, 2)]),
        StarForest([(1, 1), (2, 2), (4, 3)]),
    ])
    failed = {f.check: f.offending for f in verify_asd(starforest_only_graph, not_ascending).failed()}
    assert failed == {'ascending': (2,)}


def test_verify_non_triangular():
    graph = BipartiteGraph(1, 2, [(1, 1), (1, 2)])
    report = verify_asd(graph, Decomposition([StarForest([(1, 1)]), StarForest([(1, 2)])]))
    assert not report.overall
    assert 'triangular' in {f.check for f in report.failed()}


@given(bipartite_graphs())
def test_degree_sums_agree(graph):
    assert sum(graph.degrees(SIDE.X)) == sum(graph.degrees(SIDE.Y)) == graph.size
    assert swap_sides(swap_sides(graph)) == graph
