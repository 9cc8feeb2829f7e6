'''Exception types raised by penning.

Each error also derives from the builtin exception callers would catch
without knowing about this package.
'''
from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from penning.algebra import OperatorPoly

__all__ = [
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
]


class PenningError(Exception):
    '''Base class for every error raised by penning.'''


class GradingError(PenningError, ValueError):
    '''A graded bracket received an operator without definite parity.'''


class DomainError(PenningError, ValueError):
    '''Parameters outside the physical domain (e.g. sigma <= sqrt(2)).'''


class InvalidQuantumNumbers(PenningError, ValueError):
    '''Quantum numbers violate parity/range rules or a Fock cutoff.'''


class UnknownCaseError(PenningError, KeyError):
    '''Unknown superalgebra case id or generator name.'''

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ''


class UnknownAutomorphismError(PenningError, KeyError):
    '''Unknown automorphism name.'''

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ''


class UnsupportedError(PenningError, ValueError):
    '''Exact arithmetic requested for inexact trap frequencies.'''


class ParseError(PenningError, ValueError):
    '''Malformed polynomial or rational text.'''


class FailedRelation(PenningError, AssertionError):
    '''A (super)commutation identity has a nonzero residual.'''

    def __init__(self, label: str, difference: 'OperatorPoly'):
        super().__init__(f'{label}: residual {difference}')
        self.label = label
        self.difference = difference


class NotClosedError(PenningError, AssertionError):
    '''A bracket falls outside the span of a generator set.'''

    def __init__(self, pair: tuple[str, str], residual: 'OperatorPoly'):
        super().__init__(f'[{pair[0]}, {pair[1]}}} leaves the span: residual {residual}')
        self.pair = pair
        self.residual = residual
