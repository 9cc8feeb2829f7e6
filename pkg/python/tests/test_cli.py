import csv
import io
import json
from fractions import Fraction

import pytest

from penning.cli.trap import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def table(text):
    meta, body = {}, []
    for line in text.splitlines():
        if line.startswith('# '):
            key, _, value = line[2:].partition(': ')
            meta[key] = value
        else:
            body.append(line)
    return meta, list(csv.DictReader(io.StringIO('\n'.join(body))))


@pytest.mark.basic
def test_no_command_prints_help(capsys):
    code, out = run(capsys)
    assert code == EXIT_OK
    assert 'penning-trap' in out


@pytest.mark.basic
def test_usage_errors(capsys):
    assert run(capsys, 'spectrum', '--sigma', '3/2')[0] == EXIT_USAGE
    assert run(capsys, 'figure', '4')[0] == EXIT_USAGE
    assert run(capsys, 'verify', '--case', 'bogus')[0] == EXIT_USAGE
    assert run(capsys, 'spectrum', '--sigma', '1.4', '--g', '2')[0] == EXIT_USAGE
    assert run(capsys, 'spectrum', '--sigma', 'abc', '--g', '2')[0] == EXIT_USAGE
    assert run(capsys, 'scan', '--g', '2/3', '--sigma-min', '1.4')[0] == EXIT_USAGE


@pytest.mark.basic
def test_verify_case(capsys):
    code, out = run(capsys, 'verify', '--case', 'su21')
    assert code == EXIT_OK
    meta, rows = table(out)
    assert meta['ok'] == 'true'
    assert rows and all(r['passed'] == 'true' for r in rows)
    assert {r['case'] for r in rows} >= {'su21', 'su21@spin_flip', 'higher_order'}


@pytest.mark.basic
def test_verify_json(capsys):
    code, out = run(capsys, 'verify', '--case', 'su11_plus', '--numeric-cross-check', '--cutoff', '6',
                    '--format', 'json')
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc['schema'] == 1 and doc['cutoff'] == 6
    assert doc['data']['cases'] == {'su11_plus': {'generators': 4, 'even': 2, 'odd': 2}}
    assert all(r['ok'] for r in doc['data']['reports'])


@pytest.mark.slow
def test_verify_all(capsys):
    code, _ = run(capsys, 'verify')
    assert code == EXIT_OK


@pytest.mark.basic
def test_spectrum(capsys):
    code, out = run(capsys, 'spectrum', '--sigma', '3/2', '--g', '2/3',
                    '--max-na', '1', '--max-nb', '1', '--max-nc', '1')
    assert code == EXIT_OK
    meta, rows = table(out)
    assert meta['exact'] == 'true' and meta['sigma'] == '3/2'
    assert len(rows) == 16
    by_state = {(r['Na'], r['Nb'], r['Nc'], r['Nf']): r['energy'] for r in rows}
    assert by_state[('1', '0', '0', '0')] == '3/2'
    assert by_state[('0', '0', '1', '0')] == '3/2'
    assert by_state[('0', '0', '0', '0')] == '1/2'
    energies = [Fraction(r['energy']) for r in rows]
    assert energies == sorted(energies)


@pytest.mark.basic
def test_spectrum_su21_ground(capsys):
    _, out = run(capsys, 'spectrum', '--sigma', '3/2', '--g', '4/3')
    _, rows = table(out)
    ground = next(r for r in rows if (r['Na'], r['Nb'], r['Nc'], r['Nf']) == ('0', '0', '0', '0'))
    assert ground['energy'] == '1/4'


@pytest.mark.basic
def test_spectrum_is_deterministic(capsys):
    argv = ('spectrum', '--sigma', '2.1', '--g', '2.002')
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    meta, _ = table(first[1])
    assert meta['exact'] == 'false'


@pytest.mark.basic
def test_figure3(capsys):
    code, out = run(capsys, 'figure', '3', '--steps', '50')
    assert code == EXIT_OK
    meta, rows = table(out)
    assert meta['figure'] == '3' and meta['g'] == '4/3'
    assert '"3/2"' in meta['crossing_clusters']
    assert len(rows) == 50 * 36


@pytest.mark.basic
def test_figure1(capsys):
    code, out = run(capsys, 'figure', '1', '--steps', '100', '--format', 'json')
    assert code == EXIT_OK
    doc = json.loads(out)
    assert all(doc['checks'].values())
    assert len(doc['data']['rows']) == 100


@pytest.mark.basic
def test_scan_json(capsys):
    code, out = run(capsys, 'scan', '--g', '2/3', '--steps', '200')
    assert code == EXIT_OK
    doc = json.loads(out)
    crossings = doc['data']['crossings']
    exact = {c['sigma_exact']: c for c in crossings if c['sigma_exact']}
    assert exact['9/4']['ratio'] == [8, 1, 4, 3]
    assert exact['3/2']['case'] == 'so3_su11'


@pytest.mark.basic
def test_scan_without_rational_points(capsys):
    code, out = run(capsys, 'scan', '--g', '1', '--sigma-min', '1.6', '--sigma-max', '1.7',
                    '--maxden', '8', '--steps', '200', '--format', 'csv')
    assert code == EXIT_OK
    meta, rows = table(out)
    assert meta['maxden'] == '8'
    assert all(r['ratio'] == '' for r in rows)


@pytest.mark.basic
def test_wavefunction_check(capsys):
    code, out = run(capsys, 'wavefunction', '--N', '0', '--K', '0', '--M', '0', '--sigma', '3/2', '--check')
    assert code == EXIT_OK
    meta, [row] = table(out)
    assert meta['residual_ok'] == 'true'
    assert meta['energy'] == '3/4'
    assert float(row['residual']) < 1e-10
    assert row['radial_nodes'] == '0'


@pytest.mark.basic
def test_wavefunction_rejects_bad_numbers(capsys):
    assert run(capsys, 'wavefunction', '--N', '1', '--K', '0', '--M', '0', '--sigma', '3/2')[0] == EXIT_USAGE
    assert run(capsys, 'wavefunction', '--N', '0', '--K', '0', '--M', '0', '--sigma', '3/2',
               '--eval', '1,2')[0] == EXIT_USAGE
    assert run(capsys, 'wavefunction', '--N', '0', '--K', '0', '--M', '0', '--sigma', '3/2',
               '--eval', '1,0,0', '--profile')[0] == EXIT_USAGE


@pytest.mark.basic
def test_wavefunction_eval_and_profile(capsys):
    code, out = run(capsys, 'wavefunction', '--N', '1', '--K', '0', '--M', '1', '--sigma', '9/4',
                    '--eval', '0.5,0,0', '--eval', '0.5,1.5707963267948966,0')
    assert code == EXIT_OK
    _, rows = table(out)
    assert len(rows) == 2
    assert float(rows[0]['imag']) == 0.0
    assert float(rows[1]['real']) == pytest.approx(0.0, abs=1e-15)
    assert float(rows[1]['imag']) == pytest.approx(float(rows[0]['real']))

    code, out = run(capsys, 'wavefunction', '--N', '0', '--K', '0', '--M', '0', '--sigma', '3/2',
                    '--profile', '--points', '11')
    assert code == EXIT_OK
    _, rows = table(out)
    reals = [float(r['real']) for r in rows]
    assert len(reals) == 11
    assert all(a > b for a, b in zip(reals, reals[1:]))


@pytest.mark.basic
def test_out_file(tmp_path, capsys):
    target = tmp_path / 'levels.csv'
    code, out = run(capsys, 'spectrum', '--sigma', '3/2', '--g', '4/3', '--out', str(target))
    assert code == EXIT_OK
    assert out == ''
    assert target.read_text(encoding='utf-8').startswith('# schema: 1\n')


@pytest.mark.basic
def test_failure_exit_code_is_distinct():
    assert len({EXIT_OK, EXIT_FAILED, EXIT_USAGE}) == 3
