'''Default configuration for penning computations.

Configs are plain nested dicts. Take a copy from :func:`default_config`,
edit the keys you care about and pass it to the functions that accept a
``config`` argument::

    from penning.config import default_config

    config = default_config()
    config['fock']['cutoff'] = 10
    config['threads'] = 4
'''
from __future__ import annotations

import copy
import os
from typing import Any

from penning.logger import Logger

__all__ = ['default_config', 'resolve', 'threads', 'THREADS_ENV']

THREADS_ENV = 'PENNING_THREADS'

_DEFAULTS: dict[str, Any] = {
    'threads': 1,
    'fock': {
        'cutoff': 8,
    },
    'tolerance': {
        'numeric': 1e-12,
        'energy': 1e-9,
        'ratio': 1e-12,
        'crossing_dedup': 1e-9,
        'bisection': 1e-12,
    },
    'quadrature': {
        'start_nodes': 40,
        'max_nodes': 320,
        'gram_tol': 1e-10,
    },
    'scan': {
        'steps': 600,
        'max_denominator': 16,
    },
}


def _threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return _DEFAULTS['threads']
    try:
        value = int(raw)
    except ValueError:
        Logger.warn(f'Ignoring {THREADS_ENV}={raw!r}: not an integer')
        return _DEFAULTS['threads']
    return max(1, value)


def default_config() -> dict[str, Any]:
    '''Return a fresh copy of the default configuration.

    ``threads`` honours the ``PENNING_THREADS`` environment variable.
    '''
    config = copy.deepcopy(_DEFAULTS)
    config['threads'] = _threads_from_env()
    return config


def resolve(config: dict[str, Any] | None) -> dict[str, Any]:
    '''Return *config*, or the default configuration when it is ``None``.'''
    return default_config() if config is None else config


def threads(config: dict[str, Any] | None = None) -> int:
    '''Worker cap for parallel map operations.'''
    return max(1, int(resolve(config).get('threads', 1)))
