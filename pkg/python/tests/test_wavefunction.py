import math
from fractions import Fraction

import numpy as np
import pytest

from penning.errors import DomainError, InvalidQuantumNumbers
from penning.trap import StateLabel, TrapParameters, energy
from penning.wavefunction import (
    QuantumNumbersNKM,
    WaveParams,
    energy_nkm,
    normalization,
    overlap_matrix,
    pde_residual,
    profile,
    psi,
    radial_nodes,
    sample_points,
)

# every (N, K, M) with N <= 4, K <= 3
STATES = [(N, K, M) for N in range(5) for K in range(4) for M in range(-N, N + 1, 2)]
SIGMAS = ['3/2', 2.0, '9/4']


@pytest.fixture(scope='module')
def wp():
    return WaveParams('3/2')


@pytest.mark.basic
def test_scales(wp):
    assert wp.sigma == Fraction(3, 2)
    assert wp.Omega == Fraction(1, 2)
    assert wp.k == pytest.approx(1 / 3)
    assert wp.rho_scale() == pytest.approx(math.sqrt(2))
    with pytest.raises(DomainError):
        WaveParams('7/5')
    with pytest.raises(DomainError):
        WaveParams(1.4)


@pytest.mark.basic
def test_quantum_numbers():
    qn = QuantumNumbersNKM(3, 2, -1)
    assert qn.alpha == 1 and qn.n == 1
    assert qn.to_state(1) == StateLabel(2, 1, 2, 1)
    for bad in [(1, 0, 0), (2, -1, 0), (1, 0, 3)]:
        with pytest.raises(InvalidQuantumNumbers):
            QuantumNumbersNKM(*bad).validate()
        with pytest.raises(InvalidQuantumNumbers):
            psi(bad, WaveParams('3/2'), 0.1, 0.0, 0.0)


@pytest.mark.basic
def test_ground_state_value(wp):
    value = psi((0, 0, 0), wp, 0.0, 0.0, 0.0)
    assert isinstance(value, complex)
    assert value == pytest.approx(normalization(0, 0, 0, wp))
    with pytest.raises(InvalidQuantumNumbers):
        psi((0, 0, 0), wp, -0.1, 0.0, 0.0)


@pytest.mark.basic
def test_normalization_axial_ratio(wp):
    for K in range(4):
        ratio = (normalization(2, K + 1, 0, wp) / normalization(2, K, 0, wp)) ** 2
        assert ratio == pytest.approx(1 / (2 * (K + 1)), rel=1e-12)
    assert normalization(3, 0, -1, wp) == normalization(3, 0, 1, wp)


@pytest.mark.basic
@pytest.mark.parametrize('sigma', SIGMAS)
def test_orthonormal(sigma):
    gram = overlap_matrix(STATES, WaveParams(sigma))
    assert np.allclose(gram, np.eye(len(STATES)), rtol=0, atol=1e-8)


@pytest.mark.basic
def test_energy_exact(wp):
    assert energy_nkm((0, 0, 0), '3/2') == Fraction(3, 4)
    assert energy_nkm((2, 1, 0), wp) == Fraction(9, 4)
    assert isinstance(energy_nkm((0, 0, 0), 2.0), float)


@pytest.mark.basic
@pytest.mark.parametrize('qn', STATES)
@pytest.mark.parametrize('nf', [0, 1])
def test_energy_agrees_with_number_basis(qn, nf):
    params = TrapParameters.parse('3/2', '2/3')
    spin = params.omega_g * (nf - Fraction(1, 2))
    state = QuantumNumbersNKM(*qn).to_state(nf)
    assert energy_nkm(qn, '3/2') + spin == energy(state, params)


@pytest.mark.basic
def test_sample_points(wp):
    rho, z = sample_points(wp, 50)
    assert rho.shape == z.shape == (50,)
    assert np.all(rho > 0) and np.all(rho < 4 * wp.rho_scale())
    assert np.all(np.abs(z) < 4)
    again = sample_points(wp, 50)
    assert np.array_equal(rho, again[0])


@pytest.mark.basic
def test_ground_state_residual(wp):
    assert pde_residual((0, 0, 0), wp) < 1e-10


@pytest.mark.basic
@pytest.mark.parametrize('qn', STATES[1:])
@pytest.mark.parametrize('sigma', SIGMAS)
def test_excited_state_residual(qn, sigma):
    assert pde_residual(qn, WaveParams(sigma)) < 1e-8


@pytest.mark.basic
def test_residual_at_radial_node():
    wp = WaveParams(2.0)
    # (3, 0, 1) has L_1^1(u) = 2 - u, zero at u = Omega rho^2 / 2 = 2
    node = math.sqrt(4 / float(wp.Omega))
    rho = np.array([node, 0.5 * node, 1.5 * node])
    z = np.array([0.3, -0.7, 1.1])
    assert abs(psi((3, 0, 1), wp, node, 0.0, 0.3)) < 1e-12
    assert pde_residual((3, 0, 1), wp, points=(rho, z)) < 1e-8


@pytest.mark.basic
def test_residual_detects_energy_shift(wp):
    shift = 1e-3
    E = float(energy_nkm((0, 0, 0), wp))
    assert pde_residual((0, 0, 0), wp, energy_shift=shift) == pytest.approx(shift / (E + shift), rel=1e-6)
    assert pde_residual((2, 1, 0), wp, energy_shift=shift) > 1e-4


@pytest.mark.basic
def test_residual_needs_positive_rho(wp):
    with pytest.raises(InvalidQuantumNumbers):
        pde_residual((0, 0, 0), wp, points=(np.array([0.0, 1.0]), np.array([0.0, 0.0])))


@pytest.mark.basic
@pytest.mark.parametrize('qn, nodes', [((0, 0, 0), 0), ((2, 0, 0), 1), ((4, 0, 0), 2), ((5, 3, 1), 2), ((3, 0, -3), 0)])
def test_radial_nodes(wp, qn, nodes):
    assert radial_nodes(qn, wp) == nodes


@pytest.mark.basic
def test_conjugation_and_periodicity(wp):
    rho = np.linspace(0.1, 3.0, 7)
    z = np.linspace(-1.0, 1.0, 7)
    phi = 0.7
    plus = psi((3, 1, 1), wp, rho, phi, z)
    minus = psi((3, 1, -1), wp, rho, phi, z)
    assert np.allclose(minus, np.conj(plus), rtol=0, atol=1e-14)
    shifted = psi((3, 1, 1), wp, rho, phi + 2 * math.pi, z)
    assert np.allclose(shifted, plus, rtol=0, atol=1e-13)


@pytest.mark.basic
def test_profile(wp):
    rows = profile((0, 0, 0), wp, points=21, z_values=(0.0, 0.5))
    assert len(rows) == 42
    first = [r for r in rows if r[1] == 0.0]
    reals = [r[2] for r in first]
    assert all(a > b for a, b in zip(reals, reals[1:]))
    assert all(r[3] == 0.0 for r in rows)
    with pytest.raises(InvalidQuantumNumbers):
        profile((0, 0, 0), wp, points=1)
