# -*- coding: utf-8 -*-
"""
The auxiliary bipartite multigraph H(X, Z) of an ascending matrix, and edge
colorings of its edge instances.

An edge instance is (i, j, c): the c-th of the a_ij parallel edges joining x_i
and z_j, c = 1..a_ij. Parallel edges are interchangeable, so colorings are
normalized per cell: copy 1 carries the smallest color of the cell.
"""
from typing import Dict, Iterable, List, Sequence, Tuple, Union

import numpy as np

from core.ascending import AscendingMatrix

EdgeInstance = Tuple[int, int, int]
Cell = Tuple[int, int]


class AuxMultigraph(object):
    """bipartite multigraph given by its k x n multiplicity matrix"""

    def __init__(self, multiplicity: Union[np.ndarray, Sequence[Sequence[int]]]):
        arr = np.array(multiplicity, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2 or np.any(arr < 0):
            raise ValueError('multiplicity must be a nonnegative 2-d matrix, got {}'.format(arr))
        arr.setflags(write=False)
        self._mult = arr
        self._edges = tuple((i + 1, j + 1, c)
                            for i in range(arr.shape[0])
                            for j in range(arr.shape[1])
                            for c in range(1, int(arr[i, j]) + 1))

    @property
    def k(self) -> int:
        return self._mult.shape[0]

    @property
    def n(self) -> int:
        return self._mult.shape[1]

    @property
    def multiplicity(self) -> np.ndarray:
        return self._mult

    @property
    def edges(self) -> Tuple[EdgeInstance, ...]:
        return self._edges

    @property
    def size(self) -> int:
        return len(self._edges)

    def mult(self, i: int, j: int) -> int:
        return int(self._mult[i - 1, j - 1])

    def x_degree(self, i: int) -> int:
        return int(self._mult[i - 1].sum())

    def x_degrees(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self._mult.sum(axis=1))

    def z_degrees(self) -> Tuple[int, ...]:
        return tuple(int(v) for v in self._mult.sum(axis=0))

    def cells(self) -> Tuple[Cell, ...]:
        return tuple((int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(self._mult)))

    def without(self, cells: Iterable[Cell]) -> 'AuxMultigraph':
        """one parallel edge fewer for every listed cell (cells may repeat)"""
        arr = self._mult.copy()
        # 同一个格子可以出现多次, 每次扣一条
        for i, j in cells:
            if arr[i - 1, j - 1] <= 0:
                raise ValueError('cell ({},{}) has no edge left'.format(i, j))
            arr[i - 1, j - 1] -= 1
        return AuxMultigraph(arr)

    def __eq__(self, other):
        if not isinstance(other, AuxMultigraph):
            return NotImplemented
        return self._mult.shape == other._mult.shape and bool(np.array_equal(self._mult, other._mult))

    def __hash__(self):
        return hash((self._mult.shape, self._mult.tobytes()))

    def __repr__(self):
        return 'AuxMultigraph({})'.format(self._mult.tolist())


def multigraph_from_matrix(matrix: Union[AscendingMatrix, np.ndarray, Sequence[Sequence[int]]]) -> AuxMultigraph:
    if isinstance(matrix, AscendingMatrix):
        matrix = matrix.matrix
    return AuxMultigraph(matrix)


class EdgeColoring(object):
    """
    positive integer color per edge instance

    `solver_path` records which engine produced the coloring, if any.
    """

    def __init__(self, colors: Dict[EdgeInstance, int], solver_path: str = None):
        self._colors = {tuple(e): int(c) for e, c in colors.items()}
        if any(c < 1 for c in self._colors.values()):
            raise ValueError('colors must be positive')
        self.solver_path = solver_path

    @classmethod
    def from_cells(cls, cell_colors: Dict[Cell, Sequence[int]], solver_path: str = None) -> 'EdgeColoring':
        """sorted colors of a cell go to copies 1, 2, ... in order"""
        colors = {}
        for (i, j), values in cell_colors.items():
            for c, color in enumerate(sorted(values), start=1):
                colors[(i, j, c)] = color
        return cls(colors, solver_path)

    @property
    def colors(self) -> Dict[EdgeInstance, int]:
        return dict(self._colors)

    @property
    def c_max(self) -> int:
        return max(self._colors.values(), default=0)

    def color(self, edge: EdgeInstance) -> int:
        return self._colors[tuple(edge)]

    def cell_colors(self) -> Dict[Cell, List[int]]:
        cells = {}
        for (i, j, _), color in sorted(self._colors.items()):
            cells.setdefault((i, j), []).append(color)
        return {cell: sorted(values) for cell, values in cells.items()}

    def at_x(self, i: int) -> List[int]:
        return sorted(c for e, c in self._colors.items() if e[0] == i)

    def at_z(self, j: int) -> List[int]:
        return sorted(c for e, c in self._colors.items() if e[1] == j)

    def __len__(self):
        return len(self._colors)

    def __eq__(self, other):
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self._colors == other._colors

    def __repr__(self):
        return 'EdgeColoring({}, solver_path={})'.format(sorted(self._colors.items()), self.solver_path)


def is_proper(graph: AuxMultigraph, coloring: EdgeColoring) -> bool:
    """every edge colored, distinct colors around every X- and Z-vertex"""
    colors = coloring.colors
    if set(colors) != set(graph.edges):
        return False
    for i in range(1, graph.k + 1):
        seen = coloring.at_x(i)
        if len(seen) != len(set(seen)):
            return False
    for j in range(1, graph.n + 1):
        seen = coloring.at_z(j)
        if len(seen) != len(set(seen)):
            return False
    return True


def is_sequential(graph: AuxMultigraph, coloring: EdgeColoring, d: Sequence[int]) -> bool:
    """proper, and x_i sees exactly the colors 1..d_i"""
    if len(d) != graph.k or not is_proper(graph, coloring):
        return False
    return all(coloring.at_x(i) == list(range(1, d[i - 1] + 1)) for i in range(1, graph.k + 1))
