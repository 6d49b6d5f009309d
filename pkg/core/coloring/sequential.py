# -*- coding: utf-8 -*-
"""
Sequential colorings: proper edge colorings of H(X, Z) in which x_i sees
exactly the colors 1..d_i, and their correspondence with star-forest ASDs of
the reduced graph.

sequential_color runs two phases:
    heuristic: remove the staircase matchings M_1..M_k, peel max-degree
               matchings down to n-k, Koenig-color the rest, give the matching
               edge of x_i in M_j the color d_i - j + 1, repair Z-side clashes
               with Kempe chains
    exact:     backtracking over edge instances, smallest domain first
Whatever comes back has passed is_sequential.
"""
import time
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from core.ascending import AscendingMatrix, ascending_sequence
from core.constant import SOLVER, KEMPE_BUDGET_FACTOR
from core.error import MatchingUnavailable, HallViolation, Unsatisfiable, NotSequential, NotReduced, SearchTimeout
from core.graph import BipartiteGraph, Decomposition, StarForest
from core.reduction import is_reduced
from core.coloring.multigraph import AuxMultigraph, EdgeColoring, EdgeInstance, Cell, is_sequential
from core.coloring.konig import peel_matching, konig_color


class MatchingPlan(object):
    """
    full[i-1]   = M'_i, the k cells x_r z_s of the i-th staircase matching
    pruned[i-1] = M_i, the cells of M'_i at rows r with alpha_r >= i
    """

    def __init__(self, full, pruned, alpha, t, residual: AuxMultigraph, target: int):
        self.full = tuple(tuple(m) for m in full)
        self.pruned = tuple(tuple(m) for m in pruned)
        self.alpha = tuple(alpha)
        self.t = tuple(t)
        self.residual = residual
        self.target = target

    def rows_in(self, r: int) -> Tuple[int, ...]:
        """indices j with x_r in M_j"""
        return tuple(j for j, m in enumerate(self.pruned, start=1) if any(row == r for row, _ in m))

    def z_bound_holds(self) -> bool:
        return all(v <= self.target for v in self.residual.z_degrees())

    def __repr__(self):
        return 'MatchingPlan(alpha={}, t={}, residual={})'.format(list(self.alpha), list(self.t), self.residual)


def staircase_column(r: int, i: int, n: int, k: int) -> int:
    """
    z-index of x_r in M'_i: r + s is congruent to i or n-k+i (mod n), chosen
    inside the staircase support r + s >= k + 1 when possible
    """
    if r >= i:
        return n + i - r
    return n - k + i - r


def staircase_matchings(graph: AuxMultigraph, d: Sequence[int], n: int, k: int) -> MatchingPlan:
    """
    Builds M'_1..M'_k, prunes them by alpha_i = d_i - (n - k) and removes the
    pruned matchings from H.

    Raises:
        MatchingUnavailable: a cell of some M_i has multiplicity 0
    """
    d = tuple(d)
    alpha = tuple(v - (n - k) for v in d)
    t = tuple(max(0, min(k, a)) for a in alpha)
    full, pruned = [], []
    for i in range(1, k + 1):
        cells = [(r, staircase_column(r, i, n, k)) for r in range(1, k + 1)]
        keep = [(r, s) for r, s in cells if alpha[r - 1] >= i]
        for r, s in keep:
            if graph.mult(r, s) < 1:
                raise MatchingUnavailable(r, s, i)
        missing = [(r, s) for r, s in cells if graph.mult(r, s) < 1]
        if missing:
            logger.debug("M'{} cells {} absent from H (pruned anyway)", i, missing)
        full.append(cells)
        pruned.append(keep)
    residual = graph.without(cell for m in pruned for cell in m)
    plan = MatchingPlan(full, pruned, alpha, t, residual, n - k)
    expected = tuple(v - tt for v, tt in zip(d, t))
    if residual.x_degrees() != expected:
        logger.warning('residual X-degrees {} differ from d - t = {}', residual.x_degrees(), expected)
    if not plan.z_bound_holds():
        logger.warning('residual Z-degrees {} exceed n-k={} for d={}', residual.z_degrees(), n - k, list(d))
    return plan


def _heuristic(graph: AuxMultigraph, d: Sequence[int], budget: int) -> Optional[EdgeColoring]:
    k, n = graph.k, graph.n
    if not 1 <= k <= n:
        logger.debug('heuristic: needs 1 <= k <= n, got k={} n={}', k, n)
        return None
    try:
        plan = staircase_matchings(graph, d, n, k)
    except MatchingUnavailable as err:
        # 阶梯上缺格子, 交给精确搜索
        logger.warning('heuristic: {} for d={} n={}', err, list(d), n)
        return None
    target = plan.target
    cell_colors: Dict[Cell, List[int]] = {}

    # M_j edge of x_i -> d_i - j + 1
    for j, matching in enumerate(plan.pruned, start=1):
        for r, s in matching:
            cell_colors.setdefault((r, s), []).append(d[r - 1] - j + 1)

    rest = plan.residual
    while max(rest.x_degrees(), default=0) > target:
        top = max(rest.x_degrees())
        if top <= max(rest.z_degrees(), default=0):
            logger.warning('heuristic: peel precondition fails, Delta(X)={} Z={}', top, rest.z_degrees())
            return None
        try:
            matching = peel_matching(rest)
        except HallViolation as err:
            logger.warning('heuristic: {}', err)
            return None
        for cell in matching:
            cell_colors.setdefault(cell, []).append(top)
        rest = rest.without(matching)

    if any(v != target for v in rest.x_degrees() if v) or max(rest.z_degrees(), default=0) > target:
        logger.warning('heuristic: residual degrees X={} Z={} do not fit {} colors',
                       rest.x_degrees(), rest.z_degrees(), target)
        return None
    if rest.size:
        base = konig_color(rest, target)
        for (i, j, _), color in base.colors.items():
            cell_colors.setdefault((i, j), []).append(color)

    edges = _edge_colors(cell_colors)
    if not _kempe_repair(edges, d, budget):
        return None
    coloring = EdgeColoring.from_cells(_cells_of(edges), SOLVER.HEURISTIC)
    return coloring if is_sequential(graph, coloring, d) else None


def _edge_colors(cell_colors: Dict[Cell, List[int]]) -> List[List[int]]:
    return [[i, j, color] for (i, j), values in sorted(cell_colors.items()) for color in sorted(values)]


def _cells_of(edges: List[List[int]]) -> Dict[Cell, List[int]]:
    cells: Dict[Cell, List[int]] = {}
    for i, j, color in edges:
        cells.setdefault((i, j), []).append(color)
    return cells


def _kempe_repair(edges: List[List[int]], d: Sequence[int], budget: int) -> bool:
    """
    Removes Z-side clashes in place. X-sides are already exactly 1..d_i; a
    c/c' chain leaving the clashing z along c is flipped only if it ends at a
    Z-vertex, which keeps every X color set unchanged.
    """
    top = max(d, default=0)
    swaps = 0
    while True:
        at_x: Dict[Tuple[int, int], int] = {}
        at_z: Dict[Tuple[int, int], List[int]] = {}
        for idx, (i, j, color) in enumerate(edges):
            at_x[(i, color)] = idx
            at_z.setdefault((j, color), []).append(idx)
        clashes = sorted(key for key, idxs in at_z.items() if len(idxs) > 1)
        if not clashes:
            if swaps:
                logger.debug('kempe repair: {} swap(s)', swaps)
            return True
        # 交换次数用完就放弃
        if swaps >= budget:
            logger.warning('kempe repair: budget {} exhausted with {} clash(es)', budget, len(clashes))
            return False
        z, c = clashes[0]
        chain = None
        for start in at_z[(z, c)]:
            for other in range(1, top + 1):
                if other == c or (z, other) in at_z:
                    continue
                chain = _chain(edges, start, c, other, at_x, at_z)
                if chain is not None:
                    break
            if chain is not None:
                break
        if chain is None:
            logger.debug('kempe repair: no admissible chain at z{} color {}', z, c)
            return False
        for idx in chain:
            edges[idx][2] = other if edges[idx][2] == c else c
        swaps += 1


def _chain(edges, start, c, other, at_x, at_z) -> Optional[List[int]]:
    """c/other alternating path from edges[start]; None if it ends at an X-vertex or loops"""
    path = [start]
    seen = {start}
    idx, want = start, other
    while True:
        i, j, _ = edges[idx]
        if want == other:
            nxt = at_x.get((i, other))
            if nxt is None:
                return None
        else:
            candidates = [e for e in at_z.get((j, c), []) if e not in seen]
            if not candidates:
                return path
            nxt = candidates[0]
        if nxt in seen:
            return None
        path.append(nxt)
        seen.add(nxt)
        idx = nxt
        want = c if want == other else other


class _ExactSearch(object):
    """
    Backtracking over edge instances. Domain of an x_i edge is 1..d_i minus
    the colors already used at x_i and at its z. Copies of one cell take
    increasing colors, and the next variable is always the eligible edge with
    the smallest domain (ties: lower x, z, copy).
    """

    def __init__(self, graph: AuxMultigraph, d: Sequence[int], timeout: Optional[float] = None):
        self.graph = graph
        self.d = tuple(d)
        self.edges = list(graph.edges)
        self.used_x = [set() for _ in range(graph.k + 1)]
        self.used_z = [set() for _ in range(graph.n + 1)]
        self.assigned: Dict[EdgeInstance, int] = {}
        self.nodes = 0
        self.timeout = timeout
        self.deadline = time.monotonic() + timeout if timeout is not None else None

    def _domain(self, edge: EdgeInstance) -> List[int]:
        i, j, c = edge
        low = self.assigned.get((i, j, c - 1), 0)
        return [v for v in range(low + 1, self.d[i - 1] + 1)
                if v not in self.used_x[i] and v not in self.used_z[j]]

    def _eligible(self) -> List[EdgeInstance]:
        return [e for e in self.edges if e not in self.assigned and (e[2] == 1 or (e[0], e[1], e[2] - 1) in self.assigned)]

    def _z_feasible(self) -> bool:
        # unassigned edges at z need distinct colors from what is still free there
        for j in range(1, self.graph.n + 1):
            pending = [e for e in self.edges if e[1] == j and e not in self.assigned]
            if not pending:
                continue
            room = set()
            for i, _, _ in pending:
                room.update(v for v in range(1, self.d[i - 1] + 1) if v not in self.used_z[j] and v not in self.used_x[i])
            if len(room) < len(pending):
                return False
        return True

    def solve(self) -> Optional[Dict[EdgeInstance, int]]:
        if any(self.graph.x_degree(i) != self.d[i - 1] for i in range(1, self.graph.k + 1)):
            return None
        return dict(self.assigned) if self._search() else None

    def _search(self) -> bool:
        if len(self.assigned) == len(self.edges):
            return True
        self.nodes += 1
        if self.deadline is not None and time.monotonic() >= self.deadline:
            raise SearchTimeout(self.d, self.timeout, self.nodes)
        best, best_domain = None, None
        for edge in self._eligible():
            domain = self._domain(edge)
            if not domain:
                return False
            if best is None or len(domain) < len(best_domain):
                best, best_domain = edge, domain
        i, j, _ = best
        for color in best_domain:
            self.assigned[best] = color
            self.used_x[i].add(color)
            self.used_z[j].add(color)
            if self._z_feasible() and self._search():
                return True
            del self.assigned[best]
            self.used_x[i].discard(color)
            self.used_z[j].discard(color)
        return False


def sequential_color(graph: AuxMultigraph, d: Sequence[int], solver: str = SOLVER.HYBRID,
                     kempe_budget: Optional[int] = None, timeout: Optional[float] = None) -> EdgeColoring:
    """
    Sequential coloring of H for X-degrees d.

    Args:
        graph: H(X, Z)
        d: required X-degrees, deg(x_i) = d_i
        solver: SOLVER.HEURISTIC, SOLVER.EXACT or SOLVER.HYBRID
        kempe_budget: max Kempe swaps, default KEMPE_BUDGET_FACTOR * |E|^2
        timeout: seconds allowed for the exact phase, None for no limit

    Returns:
        EdgeColoring whose solver_path is SOLVER.HEURISTIC or SOLVER.FALLBACK

    Raises:
        Unsatisfiable: no sequential coloring exists (exact) or was found (heuristic only)
        SearchTimeout: the exact phase ran longer than `timeout`
    """
    d = tuple(int(v) for v in d)
    if len(d) != graph.k or graph.x_degrees() != d:
        raise ValueError('deg(x) {} does not match d={}'.format(graph.x_degrees(), list(d)))
    if solver not in (SOLVER.HEURISTIC, SOLVER.EXACT, SOLVER.HYBRID):
        raise ValueError('unknown solver: {}'.format(solver))
    if kempe_budget is None:
        kempe_budget = KEMPE_BUDGET_FACTOR * graph.size ** 2

    # 先走启发式, 失败再回溯
    if solver in (SOLVER.HEURISTIC, SOLVER.HYBRID):
        coloring = _heuristic(graph, d, kempe_budget)
        if coloring is not None:
            return coloring
        if solver == SOLVER.HEURISTIC:
            raise Unsatisfiable(d, solver)
        logger.warning('sequential_color: heuristic failed for d={}, falling back to exact search', list(d))

    search = _ExactSearch(graph, d, timeout)
    assigned = search.solve()
    logger.debug('exact sequential search: nodes={}', search.nodes)
    if assigned is None:
        raise Unsatisfiable(d, solver)
    coloring = EdgeColoring(assigned, SOLVER.FALLBACK if solver == SOLVER.HYBRID else SOLVER.EXACT)
    if not is_sequential(graph, coloring, d):
        raise NotSequential('exact search returned a non-sequential coloring')
    return coloring


def forests_from_coloring(matrix: AscendingMatrix, coloring: EdgeColoring, d: Sequence[int]) -> Decomposition:
    """edge x_i z_j of color h becomes x_i y_h in F_j"""
    graph = AuxMultigraph(matrix.matrix if isinstance(matrix, AscendingMatrix) else matrix)
    if not is_sequential(graph, coloring, d):
        raise NotSequential('coloring is not sequential for d={}'.format(list(d)))
    parts = [[] for _ in range(graph.n)]
    for (i, j, _), color in coloring.colors.items():
        parts[j - 1].append((i, color))
    return Decomposition([StarForest(p) for p in parts])


def coloring_from_forests(decomposition: Decomposition, host: BipartiteGraph) -> Tuple[AscendingMatrix, EdgeColoring]:
    """
    a_ij = degree of x_i in F_j; the parallel edges of cell (i, j) get the
    leaf indices I_ij in increasing order

    Raises:
        NotReduced: host is not a reduced graph
    """
    if not is_reduced(host):
        raise NotReduced('X-degrees {}'.format(list(host.degrees())))
    d = host.degrees()
    n = len(decomposition)
    mat = decomposition.degree_matrix(host.k)
    matrix = AscendingMatrix(mat, d, ascending_sequence(n))
    cells: Dict[Cell, List[int]] = {}
    for j, forest in enumerate(decomposition, start=1):
        for x, y in forest.edges:
            cells.setdefault((x, j), []).append(y)
    coloring = EdgeColoring.from_cells(cells)
    if not is_sequential(AuxMultigraph(mat), coloring, d):
        raise NotSequential('decomposition does not induce a sequential coloring')
    return matrix, coloring
