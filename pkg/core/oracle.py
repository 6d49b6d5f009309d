# -*- coding: utf-8 -*-
"""
Exhaustive ground truth for small instances.

brute_force assigns edges to parts one at a time and gives up only after the
whole tree has been searched, so a None answer is a certificate of
non-existence for the queried sizes and shape.
"""
from collections import Counter, namedtuple
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from core.ascending import ascending_sequence
from core.constant import ORACLE_EDGE_CAP, SHAPE, SIDE, DEFAULT_SEED
from core.error import CapExceeded, Infeasible
from core.graph import BipartiteGraph, Decomposition, StarForest, triangular_order, dominance_leq
from core.reduction import ReducedGraph, check_sufficient, check_necessary, leaf_degree_profile


class OracleQuery(object):
    """
    Args:
        graph: host graph, parts are centered in X
        sizes: part sizes in reporting order, default 1..n
        shape: SHAPE.STARFOREST or SHAPE.STAR
        require_ascending: every part embeds into the next one
    """

    def __init__(self, graph: BipartiteGraph, sizes: Sequence[int] = None, shape: str = SHAPE.STARFOREST,
                 require_ascending: bool = True):
        if sizes is None:
            sizes = ascending_sequence(triangular_order(graph.size))
        sizes = tuple(int(s) for s in sizes)
        if any(s < 0 for s in sizes) or sum(sizes) != graph.size:
            raise ValueError('sizes {} do not partition {} edges'.format(list(sizes), graph.size))
        if shape not in (SHAPE.STARFOREST, SHAPE.STAR):
            raise ValueError('unknown shape: {}'.format(shape))
        self.graph = graph
        self.sizes = sizes
        self.shape = shape
        self.require_ascending = require_ascending

    def __repr__(self):
        return 'OracleQuery(sizes={}, shape={}, ascending={}, {})'.format(
            list(self.sizes), self.shape, self.require_ascending, self.graph)


class _PartSearch(object):
    def __init__(self, query: OracleQuery):
        self.q = query
        self.edges = list(query.graph.edges)
        t = len(query.sizes)
        self.t = t
        # largest parts are filled first
        self.order = sorted(range(t), key=lambda j: (-query.sizes[j], j))
        self.kind = self._interchangeable(query)
        self.fill = [0] * t
        self.leaves = [set() for _ in range(t)]
        self.center: List[Optional[int]] = [None] * t
        self.parts: List[List[Tuple[int, int]]] = [[] for _ in range(t)]
        self.y_left = Counter(y for _, y in self.edges)
        self.nodes = 0

    @staticmethod
    def _interchangeable(query: OracleQuery) -> List[Tuple[int, int]]:
        """class id per part; empty parts of one class are tried once"""
        if not query.require_ascending:
            return [(s, 0) for s in query.sizes]
        kinds, run = [], 0
        for j, s in enumerate(query.sizes):
            if j and s != query.sizes[j - 1]:
                run += 1
            kinds.append((s, run))
        return kinds

    def _fits(self, j: int, x: int, y: int) -> bool:
        if self.fill[j] >= self.q.sizes[j] or y in self.leaves[j]:
            return False
        return self.q.shape != SHAPE.STAR or self.center[j] in (None, x)

    def _room_for_leaves(self) -> bool:
        # y still needs y_left[y] distinct parts that lack it and have space
        for y, left in self.y_left.items():
            if left and left > sum(1 for j in range(self.t)
                                   if self.fill[j] < self.q.sizes[j] and y not in self.leaves[j]):
                return False
        return True

    def _embeds(self, a: int, b: int) -> bool:
        k = self.q.graph.k
        return dominance_leq(StarForest(self.parts[a]).center_degrees(k), StarForest(self.parts[b]).center_degrees(k))

    def _chain_ok(self, j: int) -> bool:
        if self.fill[j] < self.q.sizes[j]:
            return True
        full = lambda i: 0 <= i < self.t and self.fill[i] == self.q.sizes[i]
        if full(j - 1) and not self._embeds(j - 1, j):
            return False
        return not (full(j + 1) and not self._embeds(j, j + 1))

    def _place(self, j, x, y):
        self.fill[j] += 1
        self.leaves[j].add(y)
        self.parts[j].append((x, y))
        self.y_left[y] -= 1
        if self.fill[j] == 1:
            self.center[j] = x

    def _undo(self, j, x, y):
        self.fill[j] -= 1
        self.leaves[j].discard(y)
        self.parts[j].pop()
        self.y_left[y] += 1
        if self.fill[j] == 0:
            self.center[j] = None

    def run(self) -> bool:
        if not self._room_for_leaves():
            return False
        return self._search(0)

    def _search(self, pos: int) -> bool:
        if pos == len(self.edges):
            return True
        self.nodes += 1
        x, y = self.edges[pos]
        opened = set()
        for j in self.order:
            if not self._fits(j, x, y):
                continue
            if self.fill[j] == 0:
                if self.kind[j] in opened:
                    continue
                opened.add(self.kind[j])
            self._place(j, x, y)
            ok = self._room_for_leaves() and (not self.q.require_ascending or self._chain_ok(j))
            if ok and self._search(pos + 1):
                return True
            self._undo(j, x, y)
        return False


def brute_force(query: OracleQuery, cap: int = ORACLE_EDGE_CAP) -> Optional[Decomposition]:
    """
    Returns:
        a witness decomposition with parts in query.sizes order, or None when
        none exists

    Raises:
        CapExceeded: more than `cap` edges
    """
    if query.graph.size > cap:
        raise CapExceeded(query.graph.size, cap)
    busiest = _busiest_leaf(query.graph)
    parts = sum(1 for s in query.sizes if s > 0)
    # y 在每个部分最多出现一次
    if busiest > parts:
        logger.debug('brute_force {}: a leaf of degree {} needs more than {} parts', query, busiest, parts)
        return None
    search = _PartSearch(query)
    found = search.run()
    logger.debug('brute_force {}: nodes={} found={}', query, search.nodes, found)
    if not found:
        return None
    return Decomposition([StarForest(p) for p in search.parts])


def _busiest_leaf(graph: BipartiteGraph) -> int:
    if isinstance(graph, ReducedGraph):
        return max(leaf_degree_profile(graph.d), default=0)
    return max(graph.degrees(SIDE.Y), default=0)


def _partitions(total: int, length: int, low: int) -> Iterator[Tuple[int, ...]]:
    if length == 1:
        if total >= low:
            yield (total,)
        return
    for first in range(low, total // length + 1):
        for rest in _partitions(total - first, length - 1, first):
            yield (first,) + rest


def enumerate_sequences(n: int, k_max: int = None) -> List[Tuple[int, ...]]:
    """
    every nondecreasing d of positive entries with sum n(n+1)/2 and at most
    k_max (default n) entries, by length and then lexicographically
    """
    if n < 1:
        raise ValueError('n must be positive, got {}'.format(n))
    if k_max is None:
        k_max = n
    total = n * (n + 1) // 2
    return [d for length in range(1, min(k_max, total) + 1) for d in _partitions(total, length, 1)]


def random_graph(d: Sequence[int], m: int, seed: int = DEFAULT_SEED) -> BipartiteGraph:
    """
    x_i gets d_i distinct leaves drawn uniformly from y_1..y_m

    Raises:
        Infeasible: some d_i is negative or exceeds m
    """
    d = tuple(int(v) for v in d)
    if m < 0 or any(v < 0 or v > m for v in d):
        raise Infeasible('degrees {} cannot be realized with m={}'.format(list(d), m))
    rng = np.random.default_rng(seed)
    edges = []
    for x, v in enumerate(d, start=1):
        for y in sorted(int(c) + 1 for c in rng.choice(m, v, replace=False)):
            edges.append((x, y))
    graph = BipartiteGraph(len(d), m, edges)
    assert graph.degrees() == d
    return graph


StudyRow = namedtuple('StudyRow', ['d', 'sufficient', 'necessary', 'decomposable', 'asd'])


def necessary_condition_study(n: int, k_max: int = None, cap: int = ORACLE_EDGE_CAP) -> List[StudyRow]:
    """
    For each enumerated d: the two degree conditions and whether the reduced
    graph admits a sizes 1..n star-forest decomposition, with and without the
    ascending requirement.
    """
    rows = []
    for d in enumerate_sequences(n, k_max):
        graph = ReducedGraph(d)
        decomposable = brute_force(OracleQuery(graph, require_ascending=False), cap) is not None
        asd = decomposable and brute_force(OracleQuery(graph), cap) is not None
        rows.append(StudyRow(d, check_sufficient(d, n), check_necessary(d, n), decomposable, asd))
    logger.info('necessary_condition_study n={}: {} sequences, {} decomposable',
                n, len(rows), sum(r.decomposable for r in rows))
    return rows
