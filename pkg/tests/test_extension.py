# -*- coding: utf-8 -*-
import pytest

from core.extension import ExtensionMatrix, extend_decomposition, leaf_coloring
from core.graph import BipartiteGraph, verify_asd
from core.oracle import OracleQuery, brute_force, enumerate_sequences, random_graph
from core.pipeline import decompose_reduced
from core.reduction import reduce, check_sufficient
from core.coloring.multigraph import is_sequential


def test_extension_matrix(small_decomposition, small_matrix):
    ext = ExtensionMatrix(small_decomposition, 5)
    assert ext.matrix.tolist() == small_matrix
    assert ext.d == (1, 2, 3, 3, 6)
    assert ext.sizes == (1, 2, 3, 4, 5)


def test_leaf_coloring_is_sequential(small_decomposition, small_reduced):
    ext = ExtensionMatrix(small_decomposition, 5)
    assert is_sequential(ext.multigraph(), leaf_coloring(small_decomposition), small_reduced.d)


def test_reduced_input_keeps_degree_vectors(small_reduced, small_decomposition):
    extended = extend_decomposition(small_reduced, small_decomposition)
    assert verify_asd(small_reduced, extended).overall
    for old, new in zip(small_decomposition, extended):
        assert old.center_degrees(5) == new.center_degrees(5)


def test_extension_with_oracle_witness(extension_graph):
    reduced = reduce(extension_graph)
    witness = brute_force(OracleQuery(reduced, require_ascending=False))
    assert witness is not None
    assert reduced.permutation == (1, 2, 3, 4)
    extended = extend_decomposition(extension_graph, witness)
    assert extended.sizes == (1, 2, 3, 4)
    covered = set().union(*(f.edge_set for f in extended))
    assert covered == extension_graph.edge_set
    for old, new in zip(witness, extended):
        assert new.is_star_forest()
        assert old.center_degrees(4) == new.center_degrees(4)


def test_permuted_labels():
    # x1 has the larger degree, so reduce swaps the centers
    graph = BipartiteGraph(2, 4, [(1, 1), (1, 2), (1, 3), (2, 4), (2, 1), (1, 4)])
    reduced = reduce(graph)
    assert reduced.permutation == (2, 1)
    inner = decompose_reduced(reduced.d, 3).decomposition
    extended = extend_decomposition(graph, inner, reduced)
    assert verify_asd(graph, extended).overall
    for old, new in zip(inner, extended):
        x_small, x_big = old.center_degrees(2)
        assert new.center_degrees(2) == (x_big, x_small)


def _campaign(n, graphs_per_sequence):
    for d in enumerate_sequences(n):
        if not check_sufficient(d, n):
            continue
        inner = decompose_reduced(d, n).decomposition
        for seed in range(graphs_per_sequence):
            graph = random_graph(d, max(d) + seed % 3, seed)
            reduced = reduce(graph)
            extended = extend_decomposition(graph, inner, reduced)
            assert verify_asd(graph, extended).overall, (d, seed)
            for old, new in zip(inner, extended):
                expected = [0] * graph.k
                for r, v in enumerate(old.center_degrees(reduced.k), start=1):
                    expected[reduced.permutation[r - 1] - 1] = v
                assert new.center_degrees(graph.k) == tuple(expected), (d, seed)


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_extension_random_graphs(n):
    _campaign(n, 10)


@pytest.mark.slow
@pytest.mark.parametrize('n', [1, 2, 3, 4, 5])
def test_extension_campaign(n):
    _campaign(n, 100)
