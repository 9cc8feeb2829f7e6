'''Coordinate-space eigenfunctions of the spinless trap hamiltonian.

Natural units ``ħ = m = ωz = 1``: the axial length is ``s0 = 1`` and the
cyclotron length is ``r0 = sigma**-0.5``.  A state is labelled by
``(N, K, M)``: radial quantum number ``N``, axial quantum number ``K`` and
angular momentum ``M``.  The radial factor is a generalized Laguerre
polynomial of degree ``(N - |M|)/2`` in ``(k/2)(rho/r0)**2``, the axial
factor a physicists' Hermite polynomial of degree ``K``.

Example::

    from penning.wavefunction import QuantumNumbersNKM, WaveParams, psi, pde_residual

    wp = WaveParams('3/2')
    qn = QuantumNumbersNKM(2, 1, 0)
    value = psi(qn, wp, 0.4, 0.0, 0.3)
    assert pde_residual(qn, wp) < 1e-8
'''
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any, NamedTuple, Sequence

import numpy as np
from scipy.special import eval_genlaguerre, eval_hermite, gammaln, roots_genlaguerre, roots_hermite
from scipy.stats import qmc

from penning.config import resolve
from penning.errors import InvalidQuantumNumbers
from penning.logger import Logger
from penning.trap import Number, StateLabel, TrapParameters, quantum_number_map

__all__ = [
    'WaveParams',
    'QuantumNumbersNKM',
    'psi',
    'normalization',
    'log_normalization',
    'energy_nkm',
    'pde_residual',
    'sample_points',
    'overlap_matrix',
    'radial_nodes',
    'profile',
]


@dataclass(frozen=True)
class WaveParams:
    '''Length and frequency scales at trap ratio *sigma*.

    Args:
        sigma: ``ωc/ωz``, strictly above ``sqrt(2)``. ``'p/q'`` strings stay exact.
    '''
    sigma: Number

    def __post_init__(self):
        # TrapParameters owns the sigma parsing and the domain check
        object.__setattr__(self, 'sigma', self.trap.sigma)

    @cached_property
    def trap(self) -> TrapParameters:
        return TrapParameters(self.sigma, 0)

    @property
    def Omega(self) -> Number:
        return self.trap.Omega

    @property
    def k(self) -> float:
        return float(self.trap.k)

    @property
    def r0(self) -> float:
        return float(self.sigma) ** -0.5

    @property
    def s0(self) -> float:
        return 1.0

    def rho_scale(self) -> float:
        '''``r0 / sqrt(k)``, the radial extent of the ground state.'''
        return self.r0 / math.sqrt(self.k)


class QuantumNumbersNKM(NamedTuple):
    N: int
    K: int
    M: int

    def validate(self) -> 'QuantumNumbersNKM':
        if self.K < 0 or self.N < abs(self.M) or (self.N - abs(self.M)) % 2:
            raise InvalidQuantumNumbers(
                f'(N={self.N}, K={self.K}, M={self.M}) needs N >= |M|, N - |M| even and K >= 0')
        return self

    @property
    def alpha(self) -> int:
        return abs(self.M)

    @property
    def n(self) -> int:
        '''Laguerre degree ``(N - |M|)/2``.'''
        return (self.N - abs(self.M)) // 2

    def to_state(self, nf: int = 0) -> StateLabel:
        return StateLabel(*quantum_number_map(self.N, self.K, self.M), nf)


def _qn(qn: 'QuantumNumbersNKM | Sequence[int]') -> QuantumNumbersNKM:
    return QuantumNumbersNKM(*qn).validate()


def log_normalization(N: int, K: int, abs_m: int, wp: WaveParams) -> float:
    '''``log C`` computed with log-Gamma terms.'''
    qn = QuantumNumbersNKM(N, K, abs_m).validate()
    alpha, n = qn.alpha, qn.n
    log_c2 = (
        (alpha + 1) * math.log(wp.k / 2)
        + gammaln(n + 1)
        - 1.5 * math.log(math.pi)
        - 2 * math.log(wp.r0)
        - math.log(wp.s0)
        - K * math.log(2.0)
        - gammaln(K + 1)
        - gammaln(n + alpha + 1)
    )
    return 0.5 * float(log_c2)


def normalization(N: int, K: int, abs_m: int, wp: WaveParams) -> float:
    '''Normalization constant ``C``; depends on ``M`` only through ``|M|``.

    Raises:
        InvalidQuantumNumbers: ``N < |M|``, odd ``N - |M|`` or negative ``K``.
    '''
    return math.exp(log_normalization(N, K, abs(abs_m), wp))


def psi(qn: 'QuantumNumbersNKM | Sequence[int]', wp: WaveParams, rho, phi, z) -> np.ndarray | complex:
    '''Evaluate the wavefunction at cylindrical points (broadcasting).

    Returns:
        complex scalar for scalar inputs, otherwise a complex array.
    '''
    qn = _qn(qn)
    rho, phi, z = np.asarray(rho, dtype=float), np.asarray(phi, dtype=float), np.asarray(z, dtype=float)
    if np.any(rho < 0):
        raise InvalidQuantumNumbers('psi needs rho >= 0')
    x = rho / wp.r0
    zs = z / wp.s0
    u = 0.5 * wp.k * x * x
    radial = x ** qn.alpha * np.exp(-0.25 * wp.k * x * x) * eval_genlaguerre(qn.n, qn.alpha, u)
    axial = np.exp(-0.5 * zs * zs) * eval_hermite(qn.K, zs)
    value = normalization(qn.N, qn.K, qn.alpha, wp) * radial * axial * np.exp(1j * qn.M * phi)
    return value[()] if value.ndim == 0 else value


def energy_nkm(qn: 'QuantumNumbersNKM | Sequence[int]', sigma: 'Number | str | WaveParams') -> Number:
    '''``(Omega*N + 2K - sigma*M + Omega + 1) / 2``; exact when ``Omega`` is rational.'''
    qn = _qn(qn)
    trap = sigma.trap if isinstance(sigma, WaveParams) else TrapParameters(sigma, 0)
    return (trap.Omega * qn.N + 2 * qn.K - trap.sigma * qn.M + trap.Omega + 1) / 2


# ----------------------------------------------------------------------------
# differential-equation residual
# ----------------------------------------------------------------------------

def _laguerre(n: int, alpha: int, u: np.ndarray) -> np.ndarray:
    if n < 0:
        return np.zeros_like(u)
    return eval_genlaguerre(n, alpha, u)


def _hermite(n: int, t: np.ndarray) -> np.ndarray:
    if n < 0:
        return np.zeros_like(t)
    return eval_hermite(n, t)


def sample_points(wp: WaveParams, n_points: int = 100) -> tuple[np.ndarray, np.ndarray]:
    '''Halton points with ``rho`` in ``(0, 4 r0/sqrt(k))`` and ``z`` in ``(-4, 4)``.'''
    # drop the first Halton point: it sits on rho = 0
    unit = qmc.Halton(d=2, scramble=False).random(n_points + 1)[1:]
    rho = unit[:, 0] * 4.0 * wp.rho_scale()
    z = (2.0 * unit[:, 1] - 1.0) * 4.0 * wp.s0
    return rho, z


def pde_residual(
    qn: 'QuantumNumbersNKM | Sequence[int]',
    wp: WaveParams,
    points: tuple[np.ndarray, np.ndarray] | None = None,
    energy_shift: float = 0.0,
    n_points: int = 100,
) -> float:
    '''Max relative residual of ``(H - E) psi`` over sample points.

    ``H = -∇²/2 + Omega² rho²/8 + z²/2 + (sigma/2) i ∂φ``. Derivatives of the
    Laguerre and Hermite factors come from their index-shift identities; the
    positive envelope ``C rho^|M| exp(-Omega rho²/4 - z²/2)`` is factored out
    of both the residual and ``psi`` and restored before taking maxima.

    Args:
        points: ``(rho, z)`` arrays with ``rho > 0``; default :func:`sample_points`.
        energy_shift: added to the eigenvalue, for probing sensitivity.

    Returns:
        ``max |(H - E) psi| / max |E psi|`` over the sample set.
    '''
    qn = _qn(qn)
    rho, z = sample_points(wp, n_points) if points is None else (np.asarray(points[0], float), np.asarray(points[1], float))
    if np.any(rho <= 0):
        raise InvalidQuantumNumbers('pde_residual needs rho > 0 at every sample')
    Omega, sigma = float(wp.Omega), float(wp.sigma)
    n, alpha, K, M = qn.n, qn.alpha, qn.K, qn.M
    E = float(energy_nkm(qn, wp)) + energy_shift

    u = 0.5 * Omega * rho * rho
    L = _laguerre(n, alpha, u)
    dL = -_laguerre(n - 1, alpha + 1, u)
    ddL = _laguerre(n - 2, alpha + 2, u)
    t = z / wp.s0
    H = _hermite(K, t)
    dH = 2 * K * _hermite(K - 1, t)
    ddH = 4 * K * (K - 1) * _hermite(K - 2, t)

    # (R'' + R'/rho - M² R/rho²) / envelope, with alpha = |M| so the 1/rho² terms cancel
    radial = (
        L * (-Omega * (alpha + 1) + 0.25 * Omega ** 2 * rho ** 2)
        + dL * Omega * (2 * alpha + 2 - Omega * rho ** 2)
        + ddL * Omega ** 2 * rho ** 2
    )
    axial = ddH - 2 * t * dH + (t * t - 1) * H
    potential = 0.125 * Omega ** 2 * rho ** 2 + 0.5 * z * z - 0.5 * sigma * M
    reduced = L * H
    residual = -0.5 * (radial * H + L * axial) + (potential - E) * reduced

    envelope = rho ** alpha * np.exp(-0.25 * Omega * rho * rho - 0.5 * t * t)
    scale = float(np.max(np.abs(E * reduced * envelope)))
    if scale == 0.0:
        raise InvalidQuantumNumbers(f'psi{tuple(qn)} vanishes at every sample')
    worst = float(np.max(np.abs(residual * envelope))) / scale
    Logger.debug(f'pde_residual{tuple(qn)} at sigma={wp.sigma}: {worst:.3e}')
    return worst


# ----------------------------------------------------------------------------
# orthonormality
# ----------------------------------------------------------------------------

def _radial_integrals(block: list[QuantumNumbersNKM], alpha: int, wp: WaveParams, nodes: int) -> np.ndarray:
    # ∫ rho d rho R_i R_j in u = (k/2) x², weight u^alpha e^-u
    u, w = roots_genlaguerre(nodes, alpha)
    values = np.array([eval_genlaguerre(q.n, alpha, u) for q in block])
    jacobian = wp.r0 ** 2 * (2.0 / wp.k) ** alpha / wp.k
    return jacobian * (values * w) @ values.T


def _axial_integrals(block: list[QuantumNumbersNKM], wp: WaveParams, nodes: int) -> np.ndarray:
    t, w = roots_hermite(nodes)
    values = np.array([eval_hermite(q.K, t) for q in block])
    return wp.s0 * (values * w) @ values.T


def _gram(states: list[QuantumNumbersNKM], wp: WaveParams, nodes: int) -> np.ndarray:
    size = len(states)
    gram = np.zeros((size, size))
    norms = np.array([normalization(q.N, q.K, q.alpha, wp) for q in states])
    axial = _axial_integrals(states, wp, nodes)
    by_m: dict[int, list[int]] = {}
    for i, q in enumerate(states):
        by_m.setdefault(q.M, []).append(i)
    # different M: the phi integral vanishes exactly
    for M, idx in by_m.items():
        radial = _radial_integrals([states[i] for i in idx], abs(M), wp, nodes)
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                gram[i, j] = 2 * math.pi * norms[i] * norms[j] * radial[a, b] * axial[i, j]
    return gram


def overlap_matrix(
    states: Sequence['QuantumNumbersNKM | Sequence[int]'],
    wp: WaveParams,
    config: dict[str, Any] | None = None,
) -> np.ndarray:
    '''Gram matrix ``<psi_i | psi_j>`` by product Gauss quadrature.

    The node count per axis starts at ``quadrature.start_nodes`` and doubles
    until the matrix moves by less than ``quadrature.gram_tol`` or
    ``quadrature.max_nodes`` is reached.
    '''
    quad = resolve(config)['quadrature']
    qns = [_qn(s) for s in states]
    nodes = int(quad['start_nodes'])
    gram = _gram(qns, wp, nodes)
    while nodes * 2 <= int(quad['max_nodes']):
        nodes *= 2
        refined = _gram(qns, wp, nodes)
        change = float(np.max(np.abs(refined - gram))) if gram.size else 0.0
        gram = refined
        if change < float(quad['gram_tol']):
            break
    else:
        Logger.warn(f'overlap_matrix: node cap {quad["max_nodes"]} reached')
    Logger.info(f'overlap_matrix: {len(qns)} states, {nodes} nodes per axis')
    return gram


# ----------------------------------------------------------------------------
# profiles
# ----------------------------------------------------------------------------

def radial_nodes(qn: 'QuantumNumbersNKM | Sequence[int]', wp: WaveParams, points: int = 4000) -> int:
    '''Count sign changes of the radial factor for ``rho > 0``.'''
    qn = _qn(qn)
    # every root of L_n^alpha lies below 4n + 2alpha + 2
    u_max = 4 * qn.n + 2 * qn.alpha + 10
    rho = np.linspace(0.0, math.sqrt(2 * u_max / float(wp.Omega)), points + 1)[1:]
    # the envelope is positive, so the Laguerre factor carries the sign
    values = eval_genlaguerre(qn.n, qn.alpha, 0.5 * float(wp.Omega) * rho * rho)
    signs = np.sign(values[values != 0])
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def profile(
    qn: 'QuantumNumbersNKM | Sequence[int]',
    wp: WaveParams,
    rho_max: float | None = None,
    points: int = 201,
    z_values: Sequence[float] = (0.0,),
    phi: float = 0.0,
) -> list[tuple[float, float, float, float]]:
    '''Rows ``(rho, z, real, imag)``; ``rho`` increases within each ``z`` block.'''
    qn = _qn(qn)
    if points < 2:
        raise InvalidQuantumNumbers(f'profile needs at least 2 points, got {points}')
    if rho_max is None:
        rho_max = 4.0 * wp.rho_scale() * math.sqrt(1 + qn.N)
    rho = np.linspace(0.0, rho_max, points)
    rows = []
    for z in z_values:
        values = psi(qn, wp, rho, phi, z)
        rows.extend((float(r), float(z), float(v.real), float(v.imag)) for r, v in zip(rho, values))
    return rows

