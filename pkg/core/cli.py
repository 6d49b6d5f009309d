# -*- coding: utf-8 -*-
"""
Command line front end.

    check       classify a degree sequence
    reduce      emit the reduced graph
    decompose   emit a verified certificate
    verify      check a certificate against a graph
    oracle      brute-force existence (or --study N)
    gen         random instance with prescribed X-degrees
    export-dot  graph or decomposition as Graphviz DOT

Exit codes are listed in EXIT_CODE.
"""
import argparse
import json
import os
import sys
from typing import List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, Extra, StrictBool, StrictInt, StrictStr, ValidationError, validator

from core.constant import (SOLVER, SHAPE, SIDE, FORMAT, EXIT_CODE, DEFAULT_SEED, ORACLE_EDGE_CAP, DOT_PALETTE)
from core.error import (AsdError, InstanceError, NotTriangular, SumMismatch, ConditionFailed, CapExceeded,
                        Infeasible, DimensionMismatch, Unsatisfiable)
from core.graph import BipartiteGraph, Decomposition, StarForest, verify_asd, swap_sides
from core.reduction import reduce, classify, necessary_slack
from core.pipeline import decompose
from core.oracle import OracleQuery, brute_force, random_graph, necessary_condition_study
from core.utils.base import initLogger, parse_csv_ints


class InstanceModel(BaseModel):
    k: StrictInt
    m: StrictInt
    edges: List[List[StrictInt]]

    class Config:
        extra = Extra.forbid

    @validator('edges', each_item=True)
    def _pair(cls, v):
        if len(v) != 2:
            raise ValueError('edge must be [x, y], got {}'.format(v))
        return v


class ForestModel(BaseModel):
    size: StrictInt
    edges: List[List[StrictInt]]

    class Config:
        extra = Extra.forbid

    @validator('edges')
    def _size(cls, v, values):
        if any(len(e) != 2 for e in v):
            raise ValueError('edge must be [x, y]')
        if 'size' in values and values['size'] != len(v):
            raise ValueError('size {} but {} edges'.format(values['size'], len(v)))
        return v


class CertificateModel(BaseModel):
    n: StrictInt
    forests: List[ForestModel]
    verified: StrictBool
    solverPath: StrictStr

    class Config:
        extra = Extra.forbid


def graph_from_model(model: InstanceModel) -> BipartiteGraph:
    return BipartiteGraph(model.k, model.m, (tuple(e) for e in model.edges))


def _infer_format(path: str, fmt: Optional[str]) -> str:
    if fmt:
        return fmt
    return FORMAT.JSON if path.lower().endswith('.json') else FORMAT.EDGELIST


def parse_instance(text: str, fmt: str, path: str = '<text>') -> BipartiteGraph:
    """
    Raises:
        InstanceError: malformed document or edges out of range
    """
    try:
        if fmt == FORMAT.JSON:
            return graph_from_model(InstanceModel.parse_raw(text))
        lines = [line.split('#')[0].split() for line in text.splitlines()]
        lines = [line for line in lines if line]
        if not lines or len(lines[0]) != 2:
            raise InstanceError(path, 'edgelist needs a "k m" header')
        k, m = (int(v) for v in lines[0])
        edges = []
        for line in lines[1:]:
            if len(line) != 2:
                raise InstanceError(path, 'bad edge line: {}'.format(' '.join(line)))
            edges.append((int(line[0]), int(line[1])))
        return BipartiteGraph(k, m, edges)
    except (ValidationError, ValueError) as err:
        raise InstanceError(path, str(err))


def load_instance(path: str, fmt: str = None) -> BipartiteGraph:
    if not path:
        raise InstanceError(path, 'no --input given')
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as err:
        raise InstanceError(path, str(err))
    return parse_instance(text, _infer_format(path, fmt), path)


def emit_instance(graph: BipartiteGraph, fmt: str = FORMAT.JSON) -> str:
    if fmt == FORMAT.JSON:
        model = InstanceModel(k=graph.k, m=graph.m, edges=[list(e) for e in graph.edges])
        return json.dumps(model.dict(), indent=2)
    lines = ['{} {}'.format(graph.k, graph.m)] + ['{} {}'.format(x, y) for x, y in graph.edges]
    return '\n'.join(lines) + '\n'


def certificate_from(decomposition: Decomposition, verified: bool, solver_path: str) -> CertificateModel:
    forests = [ForestModel(size=f.size, edges=[list(e) for e in f.edges]) for f in decomposition]
    return CertificateModel(n=len(forests), forests=forests, verified=verified, solverPath=solver_path)


def emit_certificate(model: CertificateModel) -> str:
    return json.dumps(model.dict(), indent=2, ensure_ascii=False)


def load_certificate(path: str) -> Tuple[CertificateModel, Decomposition]:
    try:
        model = CertificateModel.parse_file(path, encoding='utf-8')
    except (ValidationError, ValueError, OSError) as err:
        raise InstanceError(path, str(err))
    decomposition = Decomposition([StarForest((tuple(e) for e in f.edges), strict=False) for f in model.forests])
    return model, decomposition


def export_dot(graph: BipartiteGraph, decomposition: Decomposition = None) -> str:
    """one color and label F<i> per forest, X on the left rank and Y on the right"""
    lines = ['graph asd {', '    rankdir=LR;', '    node [shape=circle];']
    lines.append('    { rank=same; ' + ' '.join('"x{}";'.format(x) for x in range(1, graph.k + 1)) + ' }')
    lines.append('    { rank=same; ' + ' '.join('"y{}";'.format(y) for y in range(1, graph.m + 1)) + ' }')
    owner = {}
    if decomposition is not None:
        for j, forest in enumerate(decomposition, start=1):
            for edge in forest.edges:
                owner[edge] = j
    for x, y in graph.edges:
        j = owner.get((x, y))
        if j is None:
            lines.append('    "x{}" -- "y{}";'.format(x, y))
        else:
            color = DOT_PALETTE[(j - 1) % len(DOT_PALETTE)]
            lines.append('    "x{}" -- "y{}" [color={}, label="F{}"];'.format(x, y, color, j))
    lines.append('}')
    return '\n'.join(lines) + '\n'


def exit_code_for(err: Exception) -> int:
    if isinstance(err, (InstanceError, ValidationError)):
        return EXIT_CODE.MALFORMED
    if isinstance(err, (NotTriangular, SumMismatch, ConditionFailed, CapExceeded, Infeasible, DimensionMismatch)):
        return EXIT_CODE.PRECONDITION
    if isinstance(err, Unsatisfiable):
        return EXIT_CODE.NONE_EXISTS
    return EXIT_CODE.VERIFICATION


def _write(text: str, output: Optional[str]):
    if output:
        os.makedirs(os.path.dirname(os.path.abspath(output)), exist_ok=True)
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info('wrote {}', output)
    else:
        sys.stdout.write(text if text.endswith('\n') else text + '\n')


def _oriented(graph: BipartiteGraph, side: str) -> BipartiteGraph:
    return swap_sides(graph) if side == SIDE.Y else graph


def _cmd_check(args) -> int:
    if args.degrees:
        d = parse_csv_ints(args.degrees)
    else:
        d = reduce(_oriented(load_instance(args.input, args.format), args.side)).d
    d = tuple(sorted(d))
    verdict = classify(d)
    slack = necessary_slack(d, verdict.n)
    violated = next((t for t, s in enumerate(slack, start=1) if s < 0), None)
    report = {'d': list(d), 'k': len(d), 'n': verdict.n, 'sufficient': verdict.sufficient,
              'necessary': verdict.necessary, 'firstViolation': violated}
    _write(json.dumps(report, indent=2), args.output)
    return EXIT_CODE.SUCCESS


def _cmd_reduce(args) -> int:
    reduced = reduce(_oriented(load_instance(args.input, args.format), args.side))
    logger.info('reduced vertex r is source vertex {}', list(reduced.permutation))
    _write(emit_instance(reduced, args.format or FORMAT.JSON), args.output)
    return EXIT_CODE.SUCCESS


def _cmd_decompose(args) -> int:
    graph = load_instance(args.input, args.format)
    result = decompose(graph, side=args.side, best_effort=args.best_effort, solver=args.solver,
                       stress_dir=args.stress_dir, cap=args.cap, timeout=args.timeout)
    _write(emit_certificate(certificate_from(result.decomposition, result.report.overall, result.solver_path)),
           args.output)
    return EXIT_CODE.SUCCESS


def _cmd_verify(args) -> int:
    graph = load_instance(args.input, args.format)
    if not args.certificate:
        raise InstanceError('', 'verify needs --certificate')
    _, decomposition = load_certificate(args.certificate)
    if args.side == SIDE.Y:
        graph = swap_sides(graph)
        decomposition = Decomposition([StarForest(((y, x) for x, y in f.edges), strict=False) for f in decomposition])
    report = verify_asd(graph, decomposition)
    _write(str(report), args.output)
    return EXIT_CODE.SUCCESS if report.overall else EXIT_CODE.VERIFICATION


def _cmd_oracle(args) -> int:
    if args.study:
        rows = necessary_condition_study(args.study, cap=args.cap)
        lines = ['d\tsufficient\tnecessary\tdecomposable\tasd']
        lines += ['{}\t{}\t{}\t{}\t{}'.format(','.join(map(str, r.d)), r.sufficient, r.necessary,
                                              r.decomposable, r.asd) for r in rows]
        _write('\n'.join(lines), args.output)
        return EXIT_CODE.SUCCESS
    graph = _oriented(load_instance(args.input, args.format), args.side)
    sizes = parse_csv_ints(args.sizes) if args.sizes else None
    query = OracleQuery(graph, sizes, args.shape, require_ascending=not args.any_order)
    witness = brute_force(query, args.cap)
    if witness is None:
        logger.info('no decomposition with sizes {} and shape {}', list(query.sizes), query.shape)
        return EXIT_CODE.NONE_EXISTS
    if args.side == SIDE.Y:
        witness = Decomposition([StarForest(((y, x) for x, y in f.edges), strict=False) for f in witness])
    payload = {'sizes': list(query.sizes), 'shape': query.shape, 'ascending': query.require_ascending,
               'forests': [{'size': f.size, 'edges': [list(e) for e in f.edges]} for f in witness]}
    _write(json.dumps(payload, indent=2), args.output)
    return EXIT_CODE.SUCCESS


def _cmd_gen(args) -> int:
    if not args.degrees:
        raise InstanceError('', 'gen needs --degrees')
    d = parse_csv_ints(args.degrees)
    m = args.m if args.m is not None else max(d, default=0)
    graph = random_graph(d, m, args.seed)
    _write(emit_instance(graph, args.format or FORMAT.JSON), args.output)
    return EXIT_CODE.SUCCESS


def _cmd_export_dot(args) -> int:
    graph = load_instance(args.input, args.format)
    decomposition = load_certificate(args.certificate)[1] if args.certificate else None
    _write(export_dot(graph, decomposition), args.output)
    return EXIT_CODE.SUCCESS


COMMANDS = {
    'check': _cmd_check,
    'reduce': _cmd_reduce,
    'decompose': _cmd_decompose,
    'verify': _cmd_verify,
    'oracle': _cmd_oracle,
    'gen': _cmd_gen,
    'export-dot': _cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', help='instance file (json or edgelist)')
    common.add_argument('--output', help='write the result here instead of stdout')
    common.add_argument('--format', choices=[FORMAT.JSON, FORMAT.EDGELIST], default=None)
    common.add_argument('--seed', type=int, default=DEFAULT_SEED)
    common.add_argument('--solver', choices=[SOLVER.HEURISTIC, SOLVER.EXACT, SOLVER.HYBRID], default=SOLVER.HYBRID)
    common.add_argument('--shape', choices=[SHAPE.STARFOREST, SHAPE.STAR], default=SHAPE.STARFOREST)
    common.add_argument('--side', choices=[SIDE.X, SIDE.Y, SIDE.AUTO], default=SIDE.X)
    common.add_argument('--best-effort', action='store_true')
    common.add_argument('--sizes', help='part sizes, e.g. 1,2,3')
    common.add_argument('--degrees', help='degree sequence, e.g. 4,6,9,9')
    common.add_argument('--m', type=int, default=None, help='number of Y vertices for gen')
    common.add_argument('--certificate', help='certificate file for verify/export-dot')
    common.add_argument('--stress-dir', default=None)
    common.add_argument('--cap', type=int, default=ORACLE_EDGE_CAP)
    common.add_argument('--timeout', type=float, default=None, help='decompose: seconds allowed for the exact search')
    common.add_argument('--study', type=int, default=None, help='oracle: tabulate all sequences of order N')
    common.add_argument('--any-order', action='store_true', help='oracle: do not require ascending parts')
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(prog='asd', description='star-forest ascending subgraph decompositions')
    sub = parser.add_subparsers(dest='command')
    sub.required = True
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv: Sequence[str] = None) -> int:
    args = build_parser().parse_args(argv)
    initLogger('DEBUG' if args.verbose else 'INFO')
    try:
        return COMMANDS[args.command](args)
    except (AsdError, ValidationError) as err:
        code = exit_code_for(err)
        logger.error('{}: {}', type(err).__name__, err)
        return code
    except ValueError as err:
        logger.error('malformed argument: {}', err)
        return EXIT_CODE.MALFORMED
