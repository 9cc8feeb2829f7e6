'''Trap parameterization, hamiltonian, analytic spectrum and constants of motion.

Energies and frequencies are in units of the axial frequency (``ħ = ωz = 1``).
Parameters given as exact rationals stay exact as long as
``Omega = sqrt(sigma^2 - 2)`` is rational too (every catalog point:
sigma = 3/2, 9/4 and 11/6 give Omega = 1/2, 7/4 and 7/6); otherwise the
derived frequencies are floats.
'''
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence, Union

import scipy.constants as const

from penning.algebra import AD, A, BD, B, CD, C, FD, F, OperatorPoly, apply_automorphism
from penning.errors import DomainError, InvalidQuantumNumbers, ParseError, UnsupportedError
from penning.logger import Logger

__all__ = [
    'Number',
    'parse_number',
    'is_exact',
    'rational_sqrt',
    'TrapParameters',
    'Frequencies',
    'PhysicalTrap',
    'StateLabel',
    'ConservedSet',
    'frequencies',
    'energy',
    'hamiltonian_poly',
    'reversed_spin_hamiltonian',
    'constants_of_motion',
    'quantum_number_map',
    'inverse_quantum_number_map',
    'sigma_from_physical',
    'large_sigma_energy',
    'anomaly_splitting',
]

Number = Union[Fraction, float]

HALF = Fraction(1, 2)
SQRT2 = math.sqrt(2.0)

_RATIONAL = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def parse_number(value: 'str | int | float | Fraction') -> Number:
    '''``'3/2'`` and ``'2'`` become exact Fractions; decimals stay floats.'''
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f'Not a number: {value!r}')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return value
    match = _RATIONAL.match(str(value))
    if match:
        num, den = match.groups()
        if den is not None and int(den) == 0:
            raise ParseError(f'Zero denominator in {value!r}')
        return Fraction(int(num), int(den) if den else 1)
    try:
        return float(value)
    except ValueError:
        raise ParseError(f'Not a rational or decimal number: {value!r}') from None


def is_exact(*values: object) -> bool:
    return all(isinstance(v, Fraction) for v in values)


def rational_sqrt(x: Fraction) -> Fraction | None:
    '''Exact square root of a non-negative rational, or ``None``.'''
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


class Frequencies(NamedTuple):
    omega_plus: Number
    omega_minus: Number
    omega_z: Number
    omega_g: Number


@dataclass(frozen=True)
class TrapParameters:
    '''Dimensionless trap point ``(sigma, g)`` with derived frequencies.

    Args:
        sigma: ``ωc/ωz``, strictly above ``sqrt(2)``.
        g: Landé factor; only ``|g|`` enters ``omega_g``.
    '''
    sigma: Number
    g: Number

    def __post_init__(self):
        sigma, g = parse_number(self.sigma), parse_number(self.g)
        object.__setattr__(self, 'sigma', sigma)
        object.__setattr__(self, 'g', g)
        if isinstance(sigma, Fraction):
            inside = sigma > 0 and sigma * sigma > 2
        else:
            inside = math.isfinite(sigma) and sigma > SQRT2
        if not inside:
            raise DomainError(f'sigma must exceed sqrt(2) ~ {SQRT2:.6f}, got {sigma}')

    @classmethod
    def parse(cls, sigma: 'str | Number', g: 'str | Number') -> 'TrapParameters':
        return cls(parse_number(sigma), parse_number(g))

    @cached_property
    def Omega(self) -> Number:
        if isinstance(self.sigma, Fraction):
            root = rational_sqrt(self.sigma ** 2 - 2)
            if root is not None:
                return root
        return math.sqrt(float(self.sigma) ** 2 - 2.0)

    @property
    def omega_c(self) -> Number:
        return self.sigma

    @property
    def omega_plus(self) -> Number:
        return (self.sigma + self.Omega) / 2

    @property
    def omega_minus(self) -> Number:
        return (self.sigma - self.Omega) / 2

    @property
    def omega_z(self) -> Fraction:
        return Fraction(1)

    @property
    def omega_g(self) -> Number:
        return abs(self.g) * self.sigma / 2

    @property
    def k(self) -> Number:
        return self.Omega / self.sigma

    @property
    def exact(self) -> bool:
        '''All four frequencies are exact rationals.'''
        return is_exact(self.sigma, self.g, self.Omega)

    def frequencies(self) -> Frequencies:
        return Frequencies(self.omega_plus, self.omega_minus, self.omega_z, self.omega_g)

    def require_exact(self, what: str) -> None:
        if not self.exact:
            raise UnsupportedError(
                f'{what} needs exact frequencies; sigma={self.sigma}, g={self.g} give Omega={self.Omega}')

    def __str__(self) -> str:
        return f'sigma={self.sigma}, g={self.g}'


@dataclass(frozen=True)
class PhysicalTrap:
    '''SI trap description: charge q (C), mass m (kg), field B (T), voltage V (V), size d (m).'''
    q: float
    m: float
    B: float
    V: float
    d: float

    @classmethod
    def electron(cls, d: float, B: float, V: float) -> 'PhysicalTrap':
        # electron charge is negative; the trap voltage must share its sign
        return cls(q=-const.e, m=const.m_e, B=B, V=-abs(V), d=d)

    @classmethod
    def proton(cls, d: float, B: float, V: float) -> 'PhysicalTrap':
        return cls(q=const.e, m=const.m_p, B=B, V=abs(V), d=d)


class StateLabel(NamedTuple):
    '''Number state ``|Na, Nb, Nc, Nf>``.'''
    na: int
    nb: int
    nc: int
    nf: int = 0

    def validate(self) -> 'StateLabel':
        if min(self.na, self.nb, self.nc) < 0 or self.nf not in (0, 1):
            raise InvalidQuantumNumbers(f'Invalid state {tuple(self)}: need N >= 0 and Nf in (0, 1)')
        return self

    def to_text(self) -> str:
        return f'|{self.na},{self.nb},{self.nc},{self.nf}>'


@dataclass(frozen=True)
class ConservedSet:
    '''Constants of the motion in units of ``ħωz``.'''
    h_rho: OperatorPoly
    h_phi: OperatorPoly
    h_z: OperatorPoly
    h_f: OperatorPoly
    l_z: OperatorPoly

    def as_dict(self) -> dict[str, OperatorPoly]:
        return {'Hrho': self.h_rho, 'Hphi': self.h_phi, 'Hz': self.h_z, 'Hf': self.h_f, 'Lz': self.l_z}

    def total(self) -> OperatorPoly:
        '''``Hrho + Hphi + Hz + Hf``.'''
        return self.h_rho + self.h_phi + self.h_z + self.h_f

    def __iter__(self) -> Iterator[tuple[str, OperatorPoly]]:
        return iter(self.as_dict().items())


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def frequencies(sigma: 'str | Number', g: 'str | Number') -> Frequencies:
    '''``(ω+, ω-, ωz, ωg)`` in units of ``ωz``.

    Raises:
        DomainError: if ``sigma <= sqrt(2)``.
    '''
    return TrapParameters.parse(sigma, g).frequencies()


def _as_state(state: 'StateLabel | Sequence[int]') -> StateLabel:
    return StateLabel(*state).validate()


def energy(state: 'StateLabel | Sequence[int]', params: TrapParameters) -> Number:
    '''``ω+(Na+1/2) - ω-(Nb+1/2) + (Nc+1/2) + ωg(Nf-1/2)``.'''
    s = _as_state(state)
    return (params.omega_plus * (s.na + HALF) - params.omega_minus * (s.nb + HALF)
            + params.omega_z * (s.nc + HALF) + params.omega_g * (s.nf - HALF))


def hamiltonian_poly(params: TrapParameters) -> OperatorPoly:
    '''Trap hamiltonian as an exact polynomial (``gq > 0`` convention).

    Raises:
        UnsupportedError: if the frequencies at ``params`` are not rational.
    '''
    params.require_exact('hamiltonian_poly')
    return (params.omega_plus * (AD * A + HALF) - params.omega_minus * (BD * B + HALF)
            + params.omega_z * (CD * C + HALF) + params.omega_g * (FD * F - HALF))


def reversed_spin_hamiltonian(params: TrapParameters) -> OperatorPoly:
    '''Hamiltonian for ``gq < 0``: the spin-flip image of :func:`hamiltonian_poly`.'''
    return apply_automorphism(hamiltonian_poly(params), 'spin_flip')


def constants_of_motion(params: TrapParameters) -> ConservedSet:
    '''``Hrho, Hphi, Hz, Hf, Lz``; ``Hrho + Hphi + Hz + Hf`` is the hamiltonian.

    ``Hrho = (Omega/2)(a†a + b†b + 1)``, which is ``1/4 (a†a + b†b + 1)`` at
    ``sigma = 3/2``.
    '''
    params.require_exact('constants_of_motion')
    na, nb = AD * A, BD * B
    return ConservedSet(
        h_rho=(params.Omega / 2) * (na + nb + 1),
        h_phi=(params.sigma / 2) * (na - nb),
        h_z=CD * C + HALF,
        h_f=params.omega_g * (FD * F - HALF),
        l_z=nb - na,
    )


def quantum_number_map(N: int, K: int, M: int) -> tuple[int, int, int]:
    '''``(N, K, M) -> (Na, Nb, Nc) = ((N - M)/2, (N + M)/2, K)``.'''
    if N < abs(M) or K < 0 or (N - M) % 2:
        raise InvalidQuantumNumbers(
            f'(N={N}, K={K}, M={M}) needs N >= |M|, N - |M| even and K >= 0')
    return (N - M) // 2, (N + M) // 2, K


def inverse_quantum_number_map(na: int, nb: int, nc: int) -> tuple[int, int, int]:
    '''``(Na, Nb, Nc) -> (N, K, M) = (Na + Nb, Nc, Nb - Na)``.'''
    if min(na, nb, nc) < 0:
        raise InvalidQuantumNumbers(f'Negative occupation in ({na}, {nb}, {nc})')
    return na + nb, nc, nb - na


def sigma_from_physical(trap: PhysicalTrap) -> float:
    '''``sqrt(q B^2 d^2 / (m V))`` for a trap given in SI units.

    Raises:
        DomainError: if ``q V <= 0`` or a magnitude is not positive.
    '''
    if trap.q * trap.V <= 0:
        raise DomainError(f'q and V must share a sign, got q={trap.q}, V={trap.V}')
    if trap.m <= 0 or trap.d <= 0 or trap.B == 0:
        raise DomainError(f'mass, size and field must be positive, got m={trap.m}, d={trap.d}, B={trap.B}')
    sigma = math.sqrt(trap.q * trap.B ** 2 * trap.d ** 2 / (trap.m * trap.V))
    Logger.debug(f'sigma_from_physical: {sigma:.6g}')
    return sigma


def large_sigma_energy(state: 'StateLabel | Sequence[int]', omega_c: Number, g: Number) -> Number:
    '''``ωc[(Na + g Nf / 2) - (g - 2)/4]``, the ``sigma >> 1`` limit of the spectrum.'''
    s = _as_state(state)
    g = parse_number(g)
    return omega_c * ((s.na + g * s.nf / 2) - (g - 2) / 4)


def anomaly_splitting(params: TrapParameters) -> Number:
    '''``ωg - ω+``: spin-splitting mismatch that breaks the ``g = 2`` degeneracy.'''
    return params.omega_g - params.omega_plus
