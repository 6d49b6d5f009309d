# -*- coding: utf-8 -*-
import pytest

from core.graph import BipartiteGraph, Decomposition, StarForest
from core.reduction import ReducedGraph


@pytest.fixture
def starforest_only_graph():
    """k=4, m=3; has a star-forest ASD but no star ASD"""
    return BipartiteGraph(4, 3, [(1, 1), (2, 2), (3, 3), (4, 3), (3, 2), (3, 1)])


@pytest.fixture
def starforest_witness():
    return Decomposition([
        StarForest([(1, 1)]),
        StarForest([(2, 2), (3, 3)]),
        StarForest([(4, 3), (3, 2), (3, 1)]),
    ])


@pytest.fixture
def extension_graph():
    return BipartiteGraph(4, 6, [(1, 1), (2, 1), (2, 3), (3, 3), (3, 5),
                                 (4, 2), (4, 3), (4, 4), (4, 5), (4, 6)])


@pytest.fixture
def small_degrees():
    return (1, 2, 3, 3, 6)


@pytest.fixture
def small_reduced(small_degrees):
    return ReducedGraph(small_degrees)


@pytest.fixture
def small_decomposition():
    return Decomposition([
        StarForest([(4, 1)]),
        StarForest([(5, 1), (3, 2)]),
        StarForest([(5, 2), (4, 3), (2, 1)]),
        StarForest([(5, 4), (5, 3), (3, 1), (2, 2)]),
        StarForest([(5, 5), (5, 6), (4, 2), (3, 3), (1, 1)]),
    ])


@pytest.fixture
def small_matrix():
    return [
        [0, 0, 0, 0, 1],
        [0, 0, 1, 1, 0],
        [0, 1, 0, 1, 1],
        [1, 0, 1, 0, 1],
        [0, 1, 1, 2, 2],
    ]


@pytest.fixture
def staircase_degrees():
    return (4, 6, 9, 9)


@pytest.fixture
def staircase_T():
    return [
        [0, 0, 0, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [0, 1, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 1],
    ]


