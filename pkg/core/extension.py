# -*- coding: utf-8 -*-
"""
Transfer a star-forest decomposition of reduce(G) to G itself.

H(A, U) gets c_ij parallel edges between a_i and u_j, where c_ij is the degree
of a_i in F'_j. Labelling those edges with the F'_j-leaves of a_i is a
sequential coloring because G_R is reduced; a list edge coloring with
L(a_i) = N_G(a_i) then spells out forests F_j of G with F_j ~ F'_j.
"""
from typing import Dict, List, Tuple

import numpy as np
from loguru import logger

from core.graph import BipartiteGraph, Decomposition, StarForest
from core.reduction import ReducedGraph, reduce
from core.coloring.multigraph import AuxMultigraph, EdgeColoring, Cell, is_sequential
from core.coloring.kernel import ColorLists, list_edge_color, is_list_coloring
from core.error import NotSequential, Incomplete


class ExtensionMatrix(object):
    """k x t matrix c_ij = degree of a_i in F'_j"""

    def __init__(self, decomposition: Decomposition, k: int):
        self.matrix = decomposition.degree_matrix(k)
        self.matrix.setflags(write=False)

    @property
    def d(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.matrix.sum(axis=1))

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.matrix.sum(axis=0))

    def multigraph(self) -> AuxMultigraph:
        return AuxMultigraph(self.matrix)

    def __repr__(self):
        return 'ExtensionMatrix({})'.format(self.matrix.tolist())


def leaf_coloring(decomposition: Decomposition) -> EdgeColoring:
    """parallel edges of cell (i, j) get the F'_j-leaves of x_i in increasing order"""
    cells: Dict[Cell, List[int]] = {}
    for j, forest in enumerate(decomposition, start=1):
        for x, y in forest.edges:
            cells.setdefault((x, j), []).append(y)
    return EdgeColoring.from_cells(cells)


def extend_decomposition(graph: BipartiteGraph, reduced_decomposition: Decomposition,
                         reduced: ReducedGraph = None) -> Decomposition:
    """
    Args:
        graph: G, labels as supplied by the caller
        reduced_decomposition: star-forest decomposition of reduce(G)
        reduced: reduce(G) if already at hand

    Returns:
        Decomposition of G, forest j has the center-degree vector of F'_j
        under the permutation of reduce(G)

    Raises:
        Incomplete: list coloring left edges uncolored
    """
    if reduced is None:
        reduced = reduce(graph)
    ext = ExtensionMatrix(reduced_decomposition, reduced.k)
    if ext.d != reduced.d:
        raise ValueError('decomposition degrees {} differ from reduced degrees {}'.format(ext.d, reduced.d))
    host = ext.multigraph()
    seq = leaf_coloring(reduced_decomposition)
    if not is_sequential(host, seq, reduced.d):
        raise NotSequential('leaf labels of the reduced decomposition are not sequential')

    lists = ColorLists({r: graph.neighbors(reduced.permutation[r - 1]) for r in range(1, reduced.k + 1)})
    assignment = list_edge_color(host, seq, lists)
    if not is_list_coloring(host, assignment, lists):
        raise Incomplete(sorted(set(host.edges) - set(assignment)))

    parts: List[List[Tuple[int, int]]] = [[] for _ in range(len(reduced_decomposition))]
    for (r, j, _), y in assignment.items():
        parts[j - 1].append(reduced.original_edge(r, y))
    result = Decomposition([StarForest(p) for p in parts])

    # F_j ~ F'_j: same center degrees, read through the permutation
    for j, (old, new) in enumerate(zip(reduced_decomposition, result), start=1):
        expected = np.zeros(graph.k, dtype=np.int64)
        for r, v in enumerate(old.center_degrees(reduced.k), start=1):
            expected[reduced.permutation[r - 1] - 1] += v
        assert tuple(int(v) for v in expected) == new.center_degrees(graph.k), j
    assert sum(result.sizes) == graph.size and set().union(*(f.edge_set for f in result)) == graph.edge_set
    logger.debug('extend_decomposition: {} forests over {} edges', len(result), graph.size)
    return result
