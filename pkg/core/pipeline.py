# -*- coding: utf-8 -*-
"""
End to end: bipartite graph -> verified star-forest ASD.

    reduce -> construct_with_support -> H(X, Z) -> sequential_color
           -> forests of G_R -> extend_decomposition -> verify_asd

Any failure of a step the theory guarantees is written to STRESS_DIR and raised
as TheoremStress.
"""
import json
import os
import time
from typing import Any, Dict, Optional, Sequence

from loguru import logger

from core.ascending import construct_with_support
from core.constant import SOLVER, SIDE, STRESS_DIR, STRESS_NAME, ORACLE_EDGE_CAP
from core.error import ConditionFailed, TheoremStress, Unsatisfiable, Incomplete, NotSequential, CapExceeded
from core.graph import BipartiteGraph, Decomposition, StarForest, VerificationReport, verify_asd, swap_sides, triangular_order
from core.reduction import ReducedGraph, reduce, check_sufficient
from core.extension import extend_decomposition
from core.coloring.multigraph import multigraph_from_matrix
from core.coloring.sequential import sequential_color, forests_from_coloring
from core.oracle import OracleQuery, brute_force


class PipelineResult(object):
    """
    decomposition is reported in the caller's labels; report was computed on
    the side that carries the star centers
    """

    def __init__(self, decomposition: Decomposition, report: VerificationReport, trace: Dict[str, Any],
                 solver_path: str, side: str = SIDE.X):
        assert report.overall, str(report)
        self.decomposition = decomposition
        self.report = report
        self.trace = trace
        self.solver_path = solver_path
        self.side = side

    @property
    def n(self) -> int:
        return len(self.decomposition)

    def __repr__(self):
        return 'PipelineResult(sizes={}, solver_path={}, side={})'.format(
            list(self.decomposition.sizes), self.solver_path, self.side)


def dump_stress(instance: Dict[str, Any], stage: str, detail: str = '', stress_dir: str = None) -> str:
    """writes the failing instance as JSON, returns the file path"""
    stress_dir = stress_dir or STRESS_DIR
    os.makedirs(stress_dir, exist_ok=True)
    stamp = time.strftime('%Y%m%d_%H%M%S') + '_{:06d}'.format(int(time.time() * 1e6) % 1000000)
    path = os.path.join(stress_dir, STRESS_NAME.format(stage=stage, stamp=stamp))
    payload = dict(instance)
    payload['stage'] = stage
    payload['detail'] = detail
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2, default=_jsonable)
    logger.error('theorem stress at stage[{}]: {} -> {}', stage, detail, path)
    return path


def _jsonable(value):
    if hasattr(value, 'tolist'):
        return value.tolist()
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    return str(value)


def _stress(instance: Dict[str, Any], stage: str, detail: str, stress_dir: Optional[str]) -> TheoremStress:
    return TheoremStress(stage, dump_stress(instance, stage, detail, stress_dir), detail)


def decompose_reduced(d: Sequence[int], n: int, solver: str = SOLVER.HYBRID, stress_dir: str = None,
                      timeout: Optional[float] = None) -> PipelineResult:
    """
    Star-forest ASD of the reduced graph with X-degrees d.

    Raises:
        SumMismatch: sum(d) != n(n+1)/2
        ConditionFailed: d fails the sufficient condition
        Unsatisfiable: solver=heuristic and the heuristic missed
        SearchTimeout: the exact phase ran past `timeout` seconds
        TheoremStress: a guaranteed step failed, instance dumped
    """
    d = tuple(sorted(int(v) for v in d))
    if not check_sufficient(d, n):
        raise ConditionFailed(d, n)
    logger.info('decompose_reduced d={} n={}', list(d), n)
    matrix = construct_with_support(d, n)
    graph = multigraph_from_matrix(matrix)
    instance = {'d': list(d), 'n': n, 'matrix': matrix.rows(), 'solver': solver}
    try:
        coloring = sequential_color(graph, d, solver, timeout=timeout)
    except Unsatisfiable as err:
        # 只跑启发式时失败不算反例
        if solver == SOLVER.HEURISTIC:
            raise
        raise _stress(instance, 'sequential_color', str(err), stress_dir)
    logger.info('sequential coloring via {} ({} colors)', coloring.solver_path, coloring.c_max)

    decomposition = forests_from_coloring(matrix, coloring, d)
    reduced = ReducedGraph(d)
    report = verify_asd(reduced, decomposition)
    if not report.overall:
        instance['coloring'] = sorted(coloring.colors.items())
        raise _stress(instance, 'verify_reduced', str(report), stress_dir)
    for j, forest in enumerate(decomposition, start=1):
        assert forest.center_degrees(len(d)) == matrix.column(j), j
    trace = {'reduced': reduced, 'matrix': matrix, 'coloring': coloring}
    return PipelineResult(decomposition, report, trace, coloring.solver_path)


def choose_side(graph: BipartiteGraph, side: str = SIDE.AUTO) -> str:
    """AUTO picks X when its degrees satisfy the condition, else Y"""
    if side in (SIDE.X, SIDE.Y):
        return side
    if side != SIDE.AUTO:
        raise ValueError('unknown side: {}'.format(side))
    n = triangular_order(graph.size)
    if check_sufficient(reduce(graph).d, n):
        return SIDE.X
    if check_sufficient(reduce(swap_sides(graph)).d, n):
        return SIDE.Y
    return SIDE.X


def decompose(graph: BipartiteGraph, side: str = SIDE.X, best_effort: bool = False, solver: str = SOLVER.HYBRID,
              stress_dir: str = None, cap: int = ORACLE_EDGE_CAP, timeout: Optional[float] = None) -> PipelineResult:
    """
    Star-forest ASD of G with centers on `side`.

    With best_effort, a graph failing the sufficient condition goes to the
    oracle instead of being rejected (up to `cap` edges).

    Raises:
        NotTriangular, ConditionFailed, TheoremStress, CapExceeded
        Unsatisfiable: best_effort and the oracle proved that none exists
    """
    n = triangular_order(graph.size)
    side = choose_side(graph, side)
    host = graph if side == SIDE.X else swap_sides(graph)
    reduced = reduce(host)
    logger.info('decompose: k={} m={} n={} side={} d={}', host.k, host.m, n, side, list(reduced.d))

    if not check_sufficient(reduced.d, n):
        if not best_effort:
            raise ConditionFailed(reduced.d, n)
        if host.size > cap:
            raise CapExceeded(host.size, cap)
        logger.warning('condition fails for d={}, asking the oracle', list(reduced.d))
        witness = brute_force(OracleQuery(host), cap)
        if witness is None:
            raise Unsatisfiable(reduced.d, SOLVER.ORACLE)
        report = verify_asd(host, witness)
        return PipelineResult(_restore(witness, side), report, {'reduced': reduced}, SOLVER.ORACLE, side)

    inner = decompose_reduced(reduced.d, n, solver, stress_dir, timeout)
    instance = {'k': host.k, 'm': host.m, 'edges': [list(e) for e in host.edges], 'side': side}
    try:
        extended = extend_decomposition(host, inner.decomposition, reduced)
    except (Incomplete, NotSequential) as err:
        raise _stress(instance, 'extend_decomposition', str(err), stress_dir)
    report = verify_asd(host, extended)
    if not report.overall:
        raise _stress(instance, 'verify', str(report), stress_dir)
    trace = dict(inner.trace)
    trace['reduced'] = reduced
    trace['reduced_decomposition'] = inner.decomposition
    return PipelineResult(_restore(extended, side), report, trace, inner.solver_path, side)


def _restore(decomposition: Decomposition, side: str) -> Decomposition:
    """back to (x, y) pairs of the caller's graph"""
    if side == SIDE.X:
        return decomposition
    return Decomposition([StarForest(((y, x) for x, y in f.edges), strict=False) for f in decomposition])
