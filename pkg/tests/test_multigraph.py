# -*- coding: utf-8 -*-
import pytest

from core.ascending import AscendingMatrix, ascending_sequence
from core.coloring.multigraph import AuxMultigraph, EdgeColoring, multigraph_from_matrix, is_proper, is_sequential


def test_small_multigraph(small_matrix, small_degrees):
    graph = multigraph_from_matrix(AscendingMatrix(small_matrix, small_degrees, ascending_sequence(5)))
    assert graph.k == graph.n == 5
    assert graph.z_degrees() == (1, 2, 3, 4, 5)
    assert graph.x_degrees() == small_degrees
    assert graph.mult(5, 4) == graph.mult(5, 5) == 2
    assert (5, 4, 2) in graph.edges and (5, 4, 3) not in graph.edges
    assert graph.size == 15
    assert [e for e in graph.edges if e[1] == 1] == [(4, 1, 1)]


def test_zero_matrix():
    graph = AuxMultigraph([[0, 0], [0, 0]])
    assert graph.size == 0
    assert graph.cells() == ()
    assert is_proper(graph, EdgeColoring({}))


def test_without():
    graph = AuxMultigraph([[2, 1]])
    smaller = graph.without([(1, 1), (1, 2)])
    assert smaller.multiplicity.tolist() == [[1, 0]]
    assert graph.multiplicity.tolist() == [[2, 1]]
    with pytest.raises(ValueError):
        smaller.without([(1, 2)])


def test_negative_multiplicity():
    with pytest.raises(ValueError):
        AuxMultigraph([[1, -1]])


def test_from_cells_orders_copies():
    coloring = EdgeColoring.from_cells({(1, 1): [3, 1], (1, 2): [2]})
    assert coloring.color((1, 1, 1)) == 1
    assert coloring.color((1, 1, 2)) == 3
    assert coloring.c_max == 3
    assert coloring.cell_colors() == {(1, 1): [1, 3], (1, 2): [2]}
    assert coloring.at_x(1) == [1, 2, 3]
    assert coloring.at_z(1) == [1, 3]


def test_predicates():
    graph = AuxMultigraph([[2, 1], [0, 1]])
    good = EdgeColoring.from_cells({(1, 1): [1, 2], (1, 2): [3], (2, 2): [1]})
    assert is_proper(graph, good)
    assert is_sequential(graph, good, (3, 1))
    assert not is_sequential(graph, good, (3, 2))

    clash = EdgeColoring.from_cells({(1, 1): [1, 2], (1, 2): [3], (2, 2): [3]})
    assert not is_proper(graph, clash)

    gap = EdgeColoring.from_cells({(1, 1): [1, 2], (1, 2): [4], (2, 2): [1]})
    assert is_proper(graph, gap)
    assert not is_sequential(graph, gap, (3, 1))

    partial = EdgeColoring.from_cells({(1, 1): [1, 2]})
    assert not is_proper(graph, partial)


def test_colors_must_be_positive():
    with pytest.raises(ValueError):
        EdgeColoring({(1, 1, 1): 0})
