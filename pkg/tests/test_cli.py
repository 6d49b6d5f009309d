# -*- coding: utf-8 -*-
import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from core.cli import (run, parse_instance, emit_instance, certificate_from, emit_certificate, load_certificate,
                      export_dot, exit_code_for, ForestModel)
from core.constant import EXIT_CODE, FORMAT, SOLVER
from core.error import InstanceError, NotTriangular, ConditionFailed, Unsatisfiable, TheoremStress, SearchTimeout
from core.reduction import ReducedGraph
from strategies import bipartite_graphs

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _write(path, text):
    with open(str(path), 'w', encoding='utf-8') as f:
        f.write(text)
    return str(path)


@pytest.fixture
def starforest_only_file(tmp_path, starforest_only_graph):
    return _write(tmp_path / 'starforest_only.json', emit_instance(starforest_only_graph))


@pytest.fixture
def small_files(tmp_path, small_reduced, small_decomposition):
    graph = _write(tmp_path / 'small.txt', emit_instance(small_reduced, FORMAT.EDGELIST))
    cert = _write(tmp_path / 'small_cert.json',
                  emit_certificate(certificate_from(small_decomposition, True, SOLVER.HEURISTIC)))
    return graph, cert


def test_check_degrees(capsys):
    assert run(['check', '--degrees', '4,6,9,9']) == EXIT_CODE.SUCCESS
    report = json.loads(capsys.readouterr().out)
    assert report == {'d': [4, 6, 9, 9], 'k': 4, 'n': 7, 'sufficient': True, 'necessary': True,
                      'firstViolation': None}


def test_check_first_violation(capsys):
    assert run(['check', '--degrees', '3,1,1,1']) == EXIT_CODE.SUCCESS
    report = json.loads(capsys.readouterr().out)
    assert report['d'] == [1, 1, 1, 3]
    assert not report['sufficient'] and not report['necessary']
    assert report['firstViolation'] == 2


def test_check_from_instance(capsys, starforest_only_file):
    assert run(['check', '--input', starforest_only_file]) == EXIT_CODE.SUCCESS
    assert json.loads(capsys.readouterr().out)['d'] == [1, 1, 1, 3]


def test_not_triangular_exit():
    assert run(['check', '--degrees', '1,1']) == EXIT_CODE.PRECONDITION


def test_malformed_exits(tmp_path):
    header_only = _write(tmp_path / 'bad.txt', '3\n')
    assert run(['reduce', '--input', header_only]) == EXIT_CODE.MALFORMED
    extra = _write(tmp_path / 'bad.json', json.dumps({'k': 1, 'm': 1, 'edges': [[1, 1]], 'weight': 2}))
    assert run(['reduce', '--input', extra]) == EXIT_CODE.MALFORMED
    out_of_range = _write(tmp_path / 'range.txt', '1 1\n2 1\n')
    assert run(['decompose', '--input', out_of_range]) == EXIT_CODE.MALFORMED
    assert run(['decompose', '--input', str(tmp_path / 'missing.json')]) == EXIT_CODE.MALFORMED
    assert run(['check', '--degrees', '1,x']) == EXIT_CODE.MALFORMED


@pytest.mark.parametrize('document', [
    {'k': '2', 'm': 1, 'edges': [[1, 1]]},
    {'k': 2.0, 'm': 1, 'edges': [[1, 1]]},
    {'k': True, 'm': 1, 'edges': [[1, 1]]},
    {'k': 1, 'm': 1, 'edges': [['1', 1]]},
    {'k': 1, 'm': 1, 'edges': [[1.0, 1]]},
    {'k': 1, 'm': 1, 'edges': [[1, True]]},
])
def test_coerced_numbers_are_malformed(tmp_path, document):
    path = _write(tmp_path / 'coerced.json', json.dumps(document))
    assert run(['reduce', '--input', path]) == EXIT_CODE.MALFORMED


def test_forest_size_is_strict():
    with pytest.raises(ValidationError):
        ForestModel(size='1', edges=[[1, 1]])


def test_parse_edgelist_comments():
    graph = parse_instance('# header\n2 2\n1 1  # first\n\n2 2\n', FORMAT.EDGELIST)
    assert graph.edges == ((1, 1), (2, 2))
    with pytest.raises(InstanceError):
        parse_instance('2 2\n1 1 1\n', FORMAT.EDGELIST)


@settings(max_examples=50, deadline=None)
@given(bipartite_graphs(), st.sampled_from([FORMAT.JSON, FORMAT.EDGELIST]))
def test_instance_formats_agree(graph, fmt):
    assert parse_instance(emit_instance(graph, fmt), fmt) == graph


def test_forest_size_is_checked():
    with pytest.raises(ValidationError):
        ForestModel(size=2, edges=[[1, 1]])


def test_reduce(capsys, tmp_path):
    path = _write(tmp_path / 'g.txt', '2 3\n2 1\n2 2\n1 3\n')
    assert run(['reduce', '--input', path, '--format', 'edgelist']) == EXIT_CODE.SUCCESS
    assert capsys.readouterr().out == '2 2\n1 1\n2 1\n2 2\n'


def test_verify(small_files):
    graph, cert = small_files
    assert run(['verify', '--input', graph, '--certificate', cert]) == EXIT_CODE.SUCCESS


def test_verify_rejects_foreign_certificate(starforest_only_file, small_files):
    _, cert = small_files
    assert run(['verify', '--input', starforest_only_file, '--certificate', cert]) == EXIT_CODE.VERIFICATION
    assert run(['verify', '--input', starforest_only_file]) == EXIT_CODE.MALFORMED


def test_load_certificate(small_files, small_decomposition):
    model, decomposition = load_certificate(small_files[1])
    assert model.n == 5 and model.verified and model.solverPath == SOLVER.HEURISTIC
    assert decomposition == small_decomposition


def test_decompose_condition_failed(small_files):
    assert run(['decompose', '--input', small_files[0]]) == EXIT_CODE.PRECONDITION


def test_decompose_best_effort(capsys, starforest_only_file):
    assert run(['decompose', '--input', starforest_only_file]) == EXIT_CODE.PRECONDITION
    capsys.readouterr()
    assert run(['decompose', '--input', starforest_only_file, '--best-effort']) == EXIT_CODE.SUCCESS
    cert = json.loads(capsys.readouterr().out)
    assert cert['solverPath'] == SOLVER.ORACLE
    assert [f['size'] for f in cert['forests']] == [1, 2, 3]


def test_decompose_timeout(tmp_path):
    graph = _write(tmp_path / 'g.json', emit_instance(ReducedGraph((4, 6, 9, 9))))
    assert run(['decompose', '--input', graph, '--solver', 'exact', '--timeout', '0']) == EXIT_CODE.VERIFICATION


def test_oracle(capsys, starforest_only_file):
    assert run(['oracle', '--input', starforest_only_file, '--shape', 'star', '--sizes', '1,2,3']) == EXIT_CODE.NONE_EXISTS
    assert run(['oracle', '--input', starforest_only_file, '--sizes', '1,2,3']) == EXIT_CODE.SUCCESS
    payload = json.loads(capsys.readouterr().out)
    assert payload['shape'] == 'starforest' and payload['ascending']
    assert sum(len(f['edges']) for f in payload['forests']) == 6


def test_oracle_study(capsys):
    assert run(['oracle', '--study', '2']) == EXIT_CODE.SUCCESS
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split('\t')[0] == 'd'
    assert [line.split('\t')[0] for line in lines[1:]] == ['3', '1,2']


def test_gen(tmp_path):
    out = str(tmp_path / 'gen' / 'g.json')
    assert run(['gen', '--degrees', '2,4', '--m', '5', '--seed', '3', '--output', out]) == EXIT_CODE.SUCCESS
    with open(out, encoding='utf-8') as f:
        graph = parse_instance(f.read(), FORMAT.JSON)
    assert graph.degrees() == (2, 4)
    assert graph.m == 5
    assert run(['gen', '--degrees', '6', '--m', '2']) == EXIT_CODE.PRECONDITION
    assert run(['gen']) == EXIT_CODE.MALFORMED


def test_export_dot(capsys, small_files, small_reduced, small_decomposition):
    graph, cert = small_files
    assert run(['export-dot', '--input', graph, '--certificate', cert]) == EXIT_CODE.SUCCESS
    out = capsys.readouterr().out
    assert out.startswith('graph asd {')
    assert 'label="F1"' in out and 'label="F5"' in out
    plain = export_dot(small_reduced)
    assert 'label=' not in plain
    assert plain.count(' -- ') == small_reduced.size == export_dot(small_reduced, small_decomposition).count(' -- ')


def test_exit_code_for():
    assert exit_code_for(InstanceError('a.json', 'bad')) == EXIT_CODE.MALFORMED
    assert exit_code_for(NotTriangular(2)) == EXIT_CODE.PRECONDITION
    assert exit_code_for(ConditionFailed((1, 1, 1, 3), 3)) == EXIT_CODE.PRECONDITION
    assert exit_code_for(Unsatisfiable((1, 1, 1, 3), SOLVER.ORACLE)) == EXIT_CODE.NONE_EXISTS
    assert exit_code_for(TheoremStress('verify', 'x.json')) == EXIT_CODE.VERIFICATION
    assert exit_code_for(SearchTimeout((3, 3, 4), 0, 1)) == EXIT_CODE.VERIFICATION


def test_main_round_trip(tmp_path):
    graph = _write(tmp_path / 'g.json', emit_instance(ReducedGraph((4, 6, 9, 9))))
    cert = str(tmp_path / 'cert.json')
    decompose = subprocess.run([sys.executable, 'main.py', 'decompose', '--input', graph, '--output', cert,
                                '--stress-dir', str(tmp_path / 'stress')], cwd=ROOT)
    assert decompose.returncode == EXIT_CODE.SUCCESS
    verify = subprocess.run([sys.executable, 'main.py', 'verify', '--input', graph, '--certificate', cert], cwd=ROOT)
    assert verify.returncode == EXIT_CODE.SUCCESS
    with open(cert, encoding='utf-8') as f:
        assert json.load(f)['n'] == 7
