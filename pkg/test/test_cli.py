import json
import subprocess
import sys
from pathlib import Path

import pytest
from logwood.testing import reset_state

from steinercodes import report
from steinercodes.cli import EXIT_INTERNAL, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, Launcher
from steinercodes.designs import read_blocks
from steinercodes.error import InconsistencyError
from steinercodes.wdist import WeightDistribution


def _run(args):
    # main configures logwood itself
    reset_state()
    Launcher().main(args)


def _exit_code(args) -> int:
    with pytest.raises(SystemExit) as info:
        _run(args)
    return info.value.code


def test_code(capsys):
    _run(['code', '--m', '4', '--e', '2'])
    out = capsys.readouterr().out
    assert '  cyclic: [15, 9, 3]' in out
    assert 'extended: [16, 9, 4]' in out
    assert '    dual: [16, 7, 6]' in out
    assert 'affine spot check failures: 0' in out


def test_code_json(capsys):
    _run(['code', '--m', '4', '--e', '1', '--format', 'json'])
    data = json.loads(capsys.readouterr().out)
    assert [(c['kind'], c['dimension'], c['min_distance']) for c in data['codes']] == \
           [('cyclic', 7, 5), ('extended', 7, 6), ('dual', 9, 4)]
    assert data['spot_checks'] == {'affine_failures': 0, 'spectral_disagreements': 0}


@pytest.mark.parametrize('m, e', [(4, 1), (4, 2), (6, 2)])
def test_wdist_all(capsys, m, e):
    _run(['wdist', '--m', str(m), '--e', str(e)])
    assert capsys.readouterr().out.rstrip().endswith('agree')


def test_wdist_json(capsys):
    _run(['wdist', '--m', '8', '--e', '2', '--method', 'closed', '--format', 'json'])
    data = json.loads(capsys.readouterr().out)
    assert data['case'] == 'c4'
    assert data['dual']['counts']['96'] == '816'
    assert data['code_low_weights'] == {'4': '5440', '6': '6136320', '8': '6240319200'}


def test_wdist_enum(capsys):
    _run(['wdist', '--m', '4', '--e', '2', '--method', 'enum', '--format', 'json'])
    data = json.loads(capsys.readouterr().out)
    assert data['code']['counts']['4'] == '20'
    assert data['dual']['counts']['6'] == '48'


def test_wdist_macwilliams(capsys):
    _run(['wdist', '--m', '6', '--e', '2', '--method', 'macwilliams', '--format', 'json'])
    data = json.loads(capsys.readouterr().out)
    assert data['code']['counts']['4'] == '336'
    assert data['dual_from'] == 'round-trip'


def test_wdist_enum_guard():
    assert _exit_code(['wdist', '--m', '8', '--e', '2', '--method', 'enum', '--guard', '10']) == EXIT_USAGE


def test_steiner_writes_block_file(capsys, tmp_path):
    _run(['steiner', '--m', '6', '--e', '2', '--out', str(tmp_path), '--shards', '2'])
    assert '336 blocks, λ=1: S(2, 4, 64)' in capsys.readouterr().out
    design = read_blocks(tmp_path / 'steiner_m6_e2.blocks')
    assert (design.v, design.b, design.lam) == (64, 336, 1)


def test_steiner_json(capsys, tmp_path):
    _run(['steiner', '--m', '4', '--e', '2', '--out', str(tmp_path), '--format', 'json'])
    data = json.loads(capsys.readouterr().out)
    assert data['lambda'] == 1
    assert data['block_file'] == str(tmp_path / 'steiner_m4_e2.json')


def test_designs(capsys):
    _run(['designs', '--m', '4', '--e', '2'])
    out = capsys.readouterr().out
    assert 'code k=4: b=20, λ=1, formula 1, OK' in out
    assert 'code k=6: b=160, λ=20, formula 20, OK' in out
    assert 'code k=8: b=150, λ=35, formula 35, OK' in out
    assert 'code k=10: b=160, λ=60, from count 60, OK' in out
    assert 'dual k=6: b=48, λ=6, formula 6, OK' in out


def test_designs_json_formula_sources(capsys):
    _run(['designs', '--m', '4', '--e', '1', '--format', 'json'])
    rows = json.loads(capsys.readouterr().out)['rows']
    sources = {(row['side'], row['k']): row['formula_source'] for row in rows}
    assert sources['dual', 4] == 'formula'
    assert all(source == 'from count' for (side, _), source in sources.items() if side == 'code')
    assert all(row['status'] == 'OK' for row in rows)


def test_designs_skip_large_side(capsys):
    _run(['designs', '--m', '6', '--e', '2'])
    out = capsys.readouterr().out
    assert 'code: skipped, dimension 51 above guard 22' in out
    assert 'dual k=24: b=1008, λ=138, formula 138, OK' in out


def test_report(capsys):
    _run(['report', '--m', '4', '--format', 'json'])
    data = json.loads(capsys.readouterr().out)
    assert data['ok']
    assert {row['e'] for row in data['rows']} == {1, 2}


@pytest.mark.parametrize('args', [
    [],
    ['wdist', '--m', '4'],
    ['wdist', '--e', '2'],
    ['wdist', '--m', '4,6', '--e', '2'],
    ['wdist', '--m', '4', '--e', '2', '--method', 'guess'],
    ['wdist', '--m', '4', '--e', '3'],
    ['steiner', '--m', '4', '--e', '1'],
    ['steiner', '--m', '5', '--e', '2'],
    ['code', '--m', '4', '--e', '2', '--shards', '3'],
    ['report', '--m', '3'],
    ['code', '--m', '2', '--e', '1'],
    ['designs', '--m', '3', '--e', '1'],
])
def test_usage_errors(args):
    assert _exit_code(args) == EXIT_USAGE


def test_mismatch_exit_code(monkeypatch):
    monkeypatch.setattr('steinercodes.designs._extract.expected_weight4_count', lambda m, e: 21)
    assert _exit_code(['steiner', '--m', '4', '--e', '2']) == EXIT_MISMATCH


def test_internal_error_exit_code(monkeypatch):
    def broken(m):
        raise InconsistencyError(f'A_6 for m={m}: not divisible')

    monkeypatch.setattr('steinercodes.cli.a468', broken)
    assert _exit_code(['wdist', '--m', '8', '--e', '2', '--method', 'closed']) == EXIT_INTERNAL


def test_small_m_gets_usage_hint(capsys):
    assert _exit_code(['code', '--m', '2', '--e', '1']) == EXIT_USAGE
    assert 'need m >= 4, got m=[2]; try e.g. --m 4 --e 2' in capsys.readouterr().err


def test_wdist_round_trip_column(capsys):
    _run(['wdist', '--m', '6', '--e', '3'])
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == 'weight | closed | enumerated | round-trip'
    assert lines[-1] == 'agree'


def test_report_inconsistency_exit_code(monkeypatch):
    transform = report.macwilliams

    def tampered(wd, dim):
        counts = dict(transform(wd, dim).counts)
        counts[6] += 1
        return WeightDistribution(wd.length, counts)

    monkeypatch.setattr('steinercodes.report.macwilliams', tampered)
    assert _exit_code(['report', '--m', '4', '--e', '2']) == EXIT_INTERNAL


def test_console_script_starts_without_logging_configured():
    result = subprocess.run(
        [sys.executable, '-c', 'from steinercodes.cli import main; main()', 'code', '--m', '4', '--e', '2'],
        cwd=Path(__file__).parents[1], capture_output=True, text=True,
    )
    assert result.returncode == EXIT_OK, result.stderr
    assert 'extended: [16, 9, 4]' in result.stdout
