# -*- coding: utf-8 -*-
"""
Matchings and Koenig edge coloring on bipartite multigraphs.
"""
from collections import deque
from typing import Dict, List, Sequence, Tuple

from loguru import logger

from core.constant import SOLVER
from core.error import HallViolation
from core.coloring.multigraph import AuxMultigraph, EdgeColoring, Cell

_NIL = 0


class HopcroftKarp(object):
    """
    Maximum matching between `left` vertices and Z = 1..n.

    Z-vertex 0 is the NIL sentinel; adjacency lists are scanned in the given
    order, so the result is deterministic.
    """

    def __init__(self, left: Sequence[int], adjacency: Dict[int, Sequence[int]], n: int):
        self.left = list(left)
        self.adjacency = {u: list(adjacency.get(u, ())) for u in self.left}
        self.match_left = {u: _NIL for u in self.left}
        self.match_right = [None] * (n + 1)
        self.dist = {}

    def _bfs(self) -> bool:
        queue = deque()
        found = False
        for u in self.left:
            if self.match_left[u] == _NIL:
                self.dist[u] = 0
                queue.append(u)
            else:
                self.dist[u] = None
        while queue:
            u = queue.popleft()
            for z in self.adjacency[u]:
                owner = self.match_right[z]
                if owner is None:
                    found = True
                elif self.dist[owner] is None:
                    self.dist[owner] = self.dist[u] + 1
                    queue.append(owner)
        return found

    def _dfs(self, u) -> bool:
        for z in self.adjacency[u]:
            owner = self.match_right[z]
            if owner is None or (self.dist[owner] == self.dist[u] + 1 and self._dfs(owner)):
                self.match_left[u] = z
                self.match_right[z] = u
                return True
        # do not visit the same vertex multiple times
        self.dist[u] = None
        return False

    def run(self) -> Dict[int, int]:
        while self._bfs():
            for u in self.left:
                if self.match_left[u] == _NIL:
                    self._dfs(u)
        return {u: z for u, z in self.match_left.items() if z != _NIL}


def peel_matching(graph: AuxMultigraph) -> List[Cell]:
    """
    Matching that saturates exactly the X-vertices of maximum degree.

    Only edges at those vertices are searched, so no other X-vertex loses an
    edge. Hall's condition holds whenever Delta(X) exceeds every Z-degree.

    Raises:
        HallViolation: the max-degree vertices cannot all be matched
    """
    x_deg = graph.x_degrees()
    top = max(x_deg, default=0)
    if top == 0:
        return []
    heavy = [i for i in range(1, graph.k + 1) if x_deg[i - 1] == top]
    if top <= max(graph.z_degrees(), default=0):
        logger.warning('peel_matching: Delta(X)={} does not exceed max Z-degree={}', top, max(graph.z_degrees()))
    # 只在最大度顶点上找匹配
    adjacency = {i: [j for j in range(1, graph.n + 1) if graph.mult(i, j) > 0] for i in heavy}
    matching = HopcroftKarp(heavy, adjacency, graph.n).run()
    if len(matching) != len(heavy):
        raise HallViolation(sorted(set(heavy) - set(matching)))
    return sorted(matching.items())


def konig_color(graph: AuxMultigraph, delta: int) -> EdgeColoring:
    """
    proper coloring with colors 1..delta, max degree <= delta

    Each edge takes the first color free at both ends; otherwise the alpha/beta
    alternating path from its Z end is flipped first (alpha free at x, beta free
    at z). In a bipartite multigraph that path never reaches x.
    """
    if max(graph.x_degrees() + graph.z_degrees(), default=0) > delta:
        raise ValueError('max degree exceeds delta={}'.format(delta))
    at_x = [dict() for _ in range(graph.k + 1)]  # color -> edge
    at_z = [dict() for _ in range(graph.n + 1)]
    colors = {}
    palette = range(1, delta + 1)

    for edge in graph.edges:
        i, j, _ = edge
        free = [c for c in palette if c not in at_x[i] and c not in at_z[j]]
        if free:
            chosen = free[0]
        else:
            # 两端没有公共空闲色, 先翻转交错路
            alpha = next(c for c in palette if c not in at_x[i])
            beta = next(c for c in palette if c not in at_z[j])
            _flip_path(j, alpha, beta, at_x, at_z, colors)
            chosen = alpha
        colors[edge] = chosen
        at_x[i][chosen] = edge
        at_z[j][chosen] = edge

    logger.debug('konig_color: {} edges, delta={}', len(colors), delta)
    return EdgeColoring(colors, SOLVER.HEURISTIC)


def _flip_path(z: int, alpha: int, beta: int, at_x, at_z, colors):
    """swap alpha and beta on the alternating path leaving z along alpha"""
    path: List[Tuple[Tuple[int, int, int], int]] = []
    side, vertex, want = 'z', z, alpha
    while True:
        table = at_z[vertex] if side == 'z' else at_x[vertex]
        edge = table.get(want)
        if edge is None:
            break
        path.append((edge, want))
        side, vertex = ('x', edge[0]) if side == 'z' else ('z', edge[1])
        want = beta if want == alpha else alpha
    for edge, old in path:
        i, j, _ = edge
        del at_x[i][old]
        del at_z[j][old]
    for edge, old in path:
        i, j, _ = edge
        new = beta if old == alpha else alpha
        colors[edge] = new
        at_x[i][new] = edge
        at_z[j][new] = edge
