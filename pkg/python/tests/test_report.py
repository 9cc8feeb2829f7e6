import json
from fractions import Fraction

import numpy as np
import pytest

from penning import __version__
from penning.report import SCHEMA_VERSION, OutputEnvelope, format_value, to_jsonable


@pytest.mark.basic
@pytest.mark.parametrize('value, text', [
    (Fraction(3, 2), '3/2'),
    (Fraction(4), '4'),
    (0.1 + 0.2, '0.3'),
    (-0.0, '0'),
    (1e-20, '1e-20'),
    (True, 'true'),
    (None, ''),
    (np.int64(7), '7'),
    (np.float64(2.5), '2.5'),
    ('su21', 'su21'),
])
def test_format_value(value, text):
    assert format_value(value) == text


@pytest.mark.basic
def test_to_jsonable():
    payload = {'a': Fraction(1, 3), 'b': np.array([1.0, 2.0]), 'c': (1, None), 3: float('inf')}
    assert to_jsonable(payload) == {'a': '1/3', 'b': [1.0, 2.0], 'c': [1, None], '3': 'inf'}


@pytest.mark.basic
def test_unknown_format():
    with pytest.raises(ValueError):
        OutputEnvelope('spectrum', format='xml')


@pytest.mark.basic
def test_csv_table_header():
    env = OutputEnvelope('spectrum', 'csv', None, {'sigma': Fraction(3, 2), 'caps': [2, 2]})
    text = env.render_table(['Na', 'energy'], [(0, Fraction(1, 2)), (1, 1.25)])
    lines = text.splitlines()
    assert lines[:4] == ['# schema: 1', '# tool: penning-trap', f'# version: {__version__}', '# command: spectrum']
    assert lines[4:] == ['# sigma: 3/2', '# caps: [2,2]', 'Na,energy', '0,1/2', '1,1.25']
    assert text == env.render_table(['Na', 'energy'], [(0, Fraction(1, 2)), (1, 1.25)])


@pytest.mark.basic
def test_json_table_and_document():
    env = OutputEnvelope('scan', 'json', None, {'g': Fraction(2, 3)})
    doc = json.loads(env.render_table(['sigma'], [(1.5,)]))
    assert doc['schema'] == SCHEMA_VERSION
    assert doc['g'] == '2/3'
    assert doc['data'] == {'columns': ['sigma'], 'rows': [[1.5]]}
    doc = json.loads(env.render_document({'x': Fraction(1, 4)}))
    assert doc['command'] == 'scan' and doc['data'] == {'x': '1/4'}
    with pytest.raises(ValueError):
        OutputEnvelope('verify', 'csv').render_document({})


@pytest.mark.basic
def test_emit_to_file(tmp_path, capsys):
    target = tmp_path / 'nested' / 'out.csv'
    env = OutputEnvelope('spectrum', 'csv', target)
    env.write_table(['a'], [(1,)])
    assert target.read_text(encoding='utf-8').endswith('a\n1\n')
    assert capsys.readouterr().out == ''
