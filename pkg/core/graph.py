# -*- coding: utf-8 -*-
"""
Bipartite graphs G(X, Y), star forests centered in X, ordered decompositions
and the ascending-decomposition verifier.

Every index seen by a caller is 1-based: x in 1..k, y in 1..m.
"""
from collections import namedtuple
from typing import Iterable, Tuple, Sequence, Optional, FrozenSet

import numpy as np
from loguru import logger

from core.constant import SIDE
from core.error import NotTriangular, DimensionMismatch
from core.utils.base import triangular_root

Edge = Tuple[int, int]
DegreeVector = Tuple[int, ...]


class BipartiteGraph(object):
    """simple bipartite graph with stable sets X (star centers) and Y (leaves)"""

    def __init__(self, k: int, m: int, edges: Iterable[Edge]):
        if k < 0 or m < 0:
            raise ValueError('negative side size: k={}, m={}'.format(k, m))
        edge_list = [(int(x), int(y)) for x, y in edges]
        edge_set = frozenset(edge_list)
        if len(edge_set) != len(edge_list):
            raise ValueError('duplicate edges in {}'.format(sorted(edge_list)))
        for x, y in edge_set:
            if not (1 <= x <= k and 1 <= y <= m):
                raise ValueError('edge ({},{}) out of range k={}, m={}'.format(x, y, k, m))
        self._k = k
        self._m = m
        self._edge_set = edge_set
        self._edges = tuple(sorted(edge_set))

    @property
    def k(self) -> int:
        return self._k

    @property
    def m(self) -> int:
        return self._m

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def edge_set(self) -> FrozenSet[Edge]:
        return self._edge_set

    @property
    def size(self) -> int:
        return len(self._edges)

    def has_edge(self, x: int, y: int) -> bool:
        return (x, y) in self._edge_set

    def neighbors(self, x: int) -> Tuple[int, ...]:
        return tuple(y for (u, y) in self._edges if u == x)

    def degrees(self, side: str = SIDE.X) -> Tuple[int, ...]:
        """
        unsorted degree list indexed by vertex, position i-1 holds vertex i

        Args:
            side: SIDE.X or SIDE.Y
        """
        if side == SIDE.X:
            deg = [0] * self._k
            for x, _ in self._edges:
                deg[x - 1] += 1
        elif side == SIDE.Y:
            deg = [0] * self._m
            for _, y in self._edges:
                deg[y - 1] += 1
        else:
            raise ValueError('unknown side: {}'.format(side))
        return tuple(deg)

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self._k, self._m, self._edge_set) == (other._k, other._m, other._edge_set)

    def __hash__(self):
        return hash((self._k, self._m, self._edge_set))

    def __repr__(self):
        return 'BipartiteGraph(k={}, m={}, edges={})'.format(self._k, self._m, list(self._edges))


class StarForest(object):
    """
    Star forest with centers in X: every y appears in at most one edge.

    `strict=False` admits arbitrary edge sets so that a decoded certificate can
    reach the verifier and be rejected there with a finding.
    """

    def __init__(self, edges: Iterable[Edge] = (), strict: bool = True):
        edge_list = [(int(x), int(y)) for x, y in edges]
        self._edge_set = frozenset(edge_list)
        self._duplicated = len(self._edge_set) != len(edge_list)
        self._edges = tuple(sorted(self._edge_set))
        if strict and not self.is_star_forest():
            raise ValueError('not a star forest centered in X: {}'.format(list(self._edges)))

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    @property
    def edge_set(self) -> FrozenSet[Edge]:
        return self._edge_set

    @property
    def size(self) -> int:
        return len(self._edges)

    def is_star_forest(self) -> bool:
        leaves = [y for _, y in self._edges]
        return not self._duplicated and len(leaves) == len(set(leaves))

    def centers(self) -> Tuple[int, ...]:
        return tuple(sorted({x for x, _ in self._edges}))

    def center_degrees(self, k: Optional[int] = None) -> DegreeVector:
        """(d_F(x_1), ..., d_F(x_k)) in natural center order"""
        if k is None:
            k = max((x for x, _ in self._edges), default=0)
        deg = [0] * k
        for x, _ in self._edges:
            if x > k:
                raise DimensionMismatch('center x{} outside k={}'.format(x, k))
            deg[x - 1] += 1
        return tuple(deg)

    def __len__(self):
        return len(self._edges)

    def __eq__(self, other):
        if not isinstance(other, StarForest):
            return NotImplemented
        return self._edge_set == other._edge_set

    def __hash__(self):
        return hash(self._edge_set)

    def __repr__(self):
        return 'StarForest({})'.format(list(self._edges))


class Decomposition(object):
    """ordered edge partition F_1 + ... + F_t"""

    def __init__(self, forests: Sequence[StarForest]):
        self._forests = tuple(forests)

    @property
    def forests(self) -> Tuple[StarForest, ...]:
        return self._forests

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(f.size for f in self._forests)

    def degree_matrix(self, k: int) -> np.ndarray:
        """k x t matrix, entry (i, j) is the degree of x_i in F_j"""
        mat = np.zeros((k, len(self._forests)), dtype=np.int64)
        for j, forest in enumerate(self._forests):
            mat[:, j] = forest.center_degrees(k)
        return mat

    def __len__(self):
        return len(self._forests)

    def __iter__(self):
        return iter(self._forests)

    def __getitem__(self, index):
        return self._forests[index]

    def __eq__(self, other):
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._forests == other._forests

    def __hash__(self):
        return hash(self._forests)

    def __repr__(self):
        return 'Decomposition(sizes={})'.format(list(self.sizes))


Finding = namedtuple('Finding', ['check', 'passed', 'offending'])


class VerificationReport(object):
    """pass iff every finding passes"""

    def __init__(self, findings: Sequence[Finding]):
        self.findings = tuple(findings)

    @property
    def overall(self) -> bool:
        return all(f.passed for f in self.findings)

    def failed(self) -> Tuple[Finding, ...]:
        return tuple(f for f in self.findings if not f.passed)

    def __bool__(self):
        return self.overall

    def __str__(self):
        lines = ['overall={}'.format('pass' if self.overall else 'fail')]
        for f in self.findings:
            lines.append('  [{}] {} {}'.format('ok' if f.passed else 'FAIL', f.check,
                                              '' if f.passed else list(f.offending)))
        return '\n'.join(lines)


def degree_sequence(graph: BipartiteGraph, side: str = SIDE.X) -> DegreeVector:
    return tuple(sorted(graph.degrees(side)))


def dominance_leq(c: Sequence[int], c2: Sequence[int]) -> bool:
    """c <= c2 componentwise after sorting both nondecreasingly"""
    if len(c) != len(c2):
        raise DimensionMismatch('dominance on lengths {} and {}'.format(len(c), len(c2)))
    return bool(np.all(np.sort(np.asarray(c, dtype=np.int64)) <= np.sort(np.asarray(c2, dtype=np.int64))))


def star_forest_embeds(forest: StarForest, other: StarForest, k: Optional[int] = None) -> bool:
    """F is isomorphic to a subgraph of F2 iff their center-degree vectors are dominance ordered"""
    if k is None:
        k = max(max((x for x, _ in forest.edges), default=0), max((x for x, _ in other.edges), default=0))
    return dominance_leq(forest.center_degrees(k), other.center_degrees(k))


def triangular_order(e: int) -> int:
    n = triangular_root(e)
    if n is None:
        raise NotTriangular(e)
    return n


def swap_sides(graph: BipartiteGraph) -> BipartiteGraph:
    return BipartiteGraph(graph.m, graph.k, ((y, x) for x, y in graph.edges))


def verify_asd(graph: BipartiteGraph, decomposition: Decomposition) -> VerificationReport:
    """
    Checks that `decomposition` is a star-forest ASD of `graph` with centers in X.

    Findings: partition, triangular, sizes, star_forest, ascending. Failures are
    reported with the offending edges (partition) or 1-based forest indices.
    """
    findings = []
    forests = decomposition.forests

    seen = {}
    duplicated, foreign = [], []
    for j, forest in enumerate(forests, start=1):
        for edge in forest.edges:
            if edge in seen:
                duplicated.append(edge)
            seen[edge] = j
            if not graph.has_edge(*edge):
                foreign.append(edge)
    missing = sorted(graph.edge_set - set(seen))
    findings.append(Finding('partition', not (duplicated or foreign or missing),
                            tuple(sorted(set(duplicated))) + tuple(sorted(foreign)) + tuple(missing)))

    # 边数不是三角数时 sizes 全部算失败
    n = triangular_root(graph.size)
    findings.append(Finding('triangular', n is not None, () if n is not None else (graph.size,)))

    if n is None:
        bad_sizes = tuple(range(1, len(forests) + 1))
    else:
        bad_sizes = tuple(j for j in range(1, max(n, len(forests)) + 1)
                          if j > len(forests) or j > n or forests[j - 1].size != j)
    findings.append(Finding('sizes', not bad_sizes, bad_sizes))

    bad_shape = tuple(j for j, forest in enumerate(forests, start=1) if not forest.is_star_forest())
    findings.append(Finding('star_forest', not bad_shape, bad_shape))

    # 只比较相邻的两个 forest
    k = max([graph.k] + [x for forest in forests for x, _ in forest.edges])
    bad_chain = tuple(j for j in range(1, len(forests))
                      if not star_forest_embeds(forests[j - 1], forests[j], k))
    findings.append(Finding('ascending', not bad_chain, bad_chain))

    report = VerificationReport(findings)
    if not report.overall:
        logger.debug('verify_asd failed: {}', [f.check for f in report.failed()])
    return report
