'''Symbolic and numeric engine for the degeneracy superalgebras of a Penning trap.

Modules:

- :mod:`penning.algebra`: normal-ordered ladder-operator polynomials and graded brackets.
- :mod:`penning.fock`: truncated Fock-space matrices used as a numeric cross-check.
- :mod:`penning.trap`: trap parameters, hamiltonian, spectrum and constants of motion.
- :mod:`penning.catalog`: generator sets, relation tables and their verification.
- :mod:`penning.scan`: level-crossing and rational-frequency scans.
- :mod:`penning.wavefunction`: coordinate-space eigenfunctions.
- :mod:`penning.report`: deterministic CSV / JSON output.
'''
from importlib.metadata import PackageNotFoundError, version as _dist_version

from penning.logger import Logger
from penning.config import default_config
from penning.errors import (
    DomainError,
    FailedRelation,
    GradingError,
    InvalidQuantumNumbers,
    NotClosedError,
    ParseError,
    PenningError,
    UnknownAutomorphismError,
    UnknownCaseError,
    UnsupportedError,
)
from penning.algebra import OperatorPoly, supercommutator
from penning.trap import StateLabel, TrapParameters, energy, frequencies, hamiltonian_poly

try:
    __version__ = _dist_version('pypenning')
except PackageNotFoundError:
    __version__ = '0.1.0'

__all__ = [
    '__version__',
    'Logger',
    'default_config',
    'PenningError',
    'GradingError',
    'DomainError',
    'InvalidQuantumNumbers',
    'UnknownCaseError',
    'UnknownAutomorphismError',
    'UnsupportedError',
    'ParseError',
    'FailedRelation',
    'NotClosedError',
    'OperatorPoly',
    'supercommutator',
    'StateLabel',
    'TrapParameters',
    'energy',
    'frequencies',
    'hamiltonian_poly',
]
