import math

import pytest

from penning.config import THREADS_ENV, default_config, resolve, threads
from penning.logger import Logger
from penning.workers import parallel_map


@pytest.mark.basic
def test_default_config_is_a_fresh_copy():
    config = default_config()
    config['fock']['cutoff'] = 3
    assert default_config()['fock']['cutoff'] == 8
    assert resolve(config) is config
    assert resolve(None)['quadrature']['max_nodes'] == 320


@pytest.mark.basic
def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, '4')
    assert threads() == 4
    monkeypatch.setenv(THREADS_ENV, 'many')
    assert threads() == 1
    monkeypatch.setenv(THREADS_ENV, '0')
    assert threads() == 1
    assert threads({'threads': 3}) == 3


@pytest.mark.basic
def test_parallel_map_keeps_order():
    items = list(range(200))
    serial = parallel_map(math.sqrt, items, {'threads': 1})
    pooled = parallel_map(math.sqrt, items, {'threads': 2})
    assert serial == pooled == [math.sqrt(i) for i in items]
    assert parallel_map(math.sqrt, [], {'threads': 2}) == []


@pytest.mark.basic
def test_logger_levels():
    before = Logger.level()
    try:
        Logger.set_level(Logger.Level.from_name('debug'))
        assert Logger.level() is Logger.Level.Debug
        Logger.set_level(Logger.Level.from_name('WARNING'))
        assert Logger.level() is Logger.Level.Warn
    finally:
        Logger.set_level(before)
    with pytest.raises(ValueError):
        Logger.Level.from_name('loud')
