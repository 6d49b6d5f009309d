# -*- coding: utf-8 -*-
"""
Reduced graphs and the degree-sequence conditions.

The reduced graph G_R of G keeps the X-degree multiset and left-justifies every
row: x_i is adjacent to y'_1, ..., y'_{d_i} with d_1 <= ... <= d_k.
"""
from collections import namedtuple
from itertools import accumulate
from typing import Sequence, Tuple, List

from loguru import logger

from core.constant import SIDE
from core.error import SumMismatch
from core.graph import BipartiteGraph, DegreeVector, triangular_order


class ReducedGraph(BipartiteGraph):
    """
    BipartiteGraph with reduced=True.

    `permutation[r-1]` is the index in the source graph of reduced vertex x_r,
    so results can be reported under the caller's labels.
    """
    reduced = True

    def __init__(self, degrees: Sequence[int], permutation: Sequence[int] = None):
        degrees = tuple(int(d) for d in degrees)
        if any(a > b for a, b in zip(degrees, degrees[1:])):
            raise ValueError('reduced degrees must be nondecreasing: {}'.format(degrees))
        if any(d < 1 for d in degrees):
            raise ValueError('reduced degrees must be positive: {}'.format(degrees))
        edges = [(i, h) for i, d in enumerate(degrees, start=1) for h in range(1, d + 1)]
        super(ReducedGraph, self).__init__(len(degrees), degrees[-1] if degrees else 0, edges)
        self.d = degrees
        self.permutation = tuple(permutation) if permutation is not None else tuple(range(1, len(degrees) + 1))
        if len(self.permutation) != len(degrees):
            raise ValueError('permutation length {} != k={}'.format(len(self.permutation), len(degrees)))

    def original_edge(self, x: int, y: int):
        """map reduced center x back to the source label, y is unchanged"""
        return self.permutation[x - 1], y

    def __repr__(self):
        return 'ReducedGraph(d={}, permutation={})'.format(list(self.d), list(self.permutation))


Classification = namedtuple('Classification', ['n', 'sufficient', 'necessary'])


def reduce(graph: BipartiteGraph) -> ReducedGraph:
    """
    X is reordered by (degree, original index); zero-degree X-vertices carry no
    stars and are dropped.
    """
    degrees = graph.degrees(SIDE.X)
    order = sorted((x for x in range(1, graph.k + 1) if degrees[x - 1] > 0), key=lambda x: (degrees[x - 1], x))
    reduced = ReducedGraph([degrees[x - 1] for x in order], order)
    logger.debug('reduce: k={} -> {}, d={}', graph.k, reduced.k, list(reduced.d))
    return reduced


def is_reduced(graph: BipartiteGraph) -> bool:
    degrees = graph.degrees(SIDE.X)
    if any(d < 1 for d in degrees) or any(a > b for a, b in zip(degrees, degrees[1:])):
        return False
    if graph.m != (degrees[-1] if degrees else 0):
        return False
    return all(graph.neighbors(x) == tuple(range(1, degrees[x - 1] + 1)) for x in range(1, graph.k + 1))


def leaf_degree_profile(degrees: Sequence[int]) -> Tuple[int, ...]:
    """degree of y'_h in the reduced graph, h = 1..max(d)"""
    top = max(degrees, default=0)
    return tuple(sum(1 for d in degrees if d >= h) for h in range(1, top + 1))


def _checked(degrees: Sequence[int], n: int) -> DegreeVector:
    d = tuple(sorted(int(v) for v in degrees))
    if sum(d) != n * (n + 1) // 2:
        raise SumMismatch(d, n)
    return d


def check_sufficient(degrees: Sequence[int], n: int) -> bool:
    """d_{k-i} >= n-i for each 0 <= i <= k-1"""
    d = _checked(degrees, n)
    k = len(d)
    ok = all(d[k - 1 - i] >= n - i for i in range(k))
    # d_1 >= n-k+1 >= 1 forces k <= n
    assert not ok or k <= n, (d, n)
    return ok


def necessary_slack(degrees: Sequence[int], n: int) -> List[int]:
    """
    per-t difference sum_{i<t} d_{k-i} - sum_{i<t} (n-i), t = 1..k
    """
    d = _checked(degrees, n)
    top = list(accumulate(reversed(d)))
    need = list(accumulate(n - i for i in range(len(d))))
    return [have - want for have, want in zip(top, need)]


def check_necessary(degrees: Sequence[int], n: int) -> bool:
    return all(s >= 0 for s in necessary_slack(degrees, n))


def classify(degrees: Sequence[int]) -> Classification:
    d = tuple(sorted(degrees))
    n = triangular_order(sum(d))
    sufficient = check_sufficient(d, n)
    necessary = check_necessary(d, n)
    assert necessary or not sufficient, d
    return Classification(n, sufficient, necessary)
