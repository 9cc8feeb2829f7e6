'''Degeneracy scans over sigma: level series, crossings, rational frequency
ratios and superalgebra classification.

Energy differences depend on a state pair only through its difference
vector ``d = s_i - s_j``::

    dE(sigma) = sigma (da - db)/2 + Omega (da + db)/2 + dc + |g| sigma df/2

so crossings are located once per distinct difference vector and fanned
out to every pair sharing it.
'''
from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, NamedTuple, Sequence

import numpy as np
from scipy.optimize import bisect

from penning.config import resolve
from penning.errors import DomainError
from penning.logger import Logger
from penning.trap import (
    SQRT2,
    Number,
    StateLabel,
    TrapParameters,
    energy,
    is_exact,
    parse_number,
)

__all__ = [
    'ScanConfig',
    'LevelScan',
    'DegenerateGroup',
    'Crossing',
    'DegeneracyReport',
    'FrequencyRatio',
    'Figure1Data',
    'scan_levels',
    'find_crossings',
    'persistent_pairs',
    'degenerate_groups',
    'detect_rational_ratios',
    'classify_point',
    'axial_magnetron_margin',
    'scan',
    'figure1_data',
]

StatePair = tuple[StateLabel, StateLabel]


@dataclass(frozen=True)
class ScanConfig:
    '''Scan window, state caps (inclusive) and tolerances.

    The defaults reproduce the level plot for ``g = 2/3``; see
    :meth:`figure2` and :meth:`figure3`.
    '''
    g: Number
    sigma_min: float = 1.45
    sigma_max: float = 3.0
    steps: int = 600
    max_na: int = 2
    max_nb: int = 3
    max_nc: int = 1
    max_nf: int = 1
    energy_tol: float = 1e-9
    max_denominator: int = 16
    bisection_tol: float = 1e-12
    dedup_tol: float = 1e-9

    def __post_init__(self):
        object.__setattr__(self, 'g', parse_number(self.g))
        if not self.sigma_min > SQRT2:
            raise DomainError(f'sigma_min must exceed sqrt(2), got {self.sigma_min}')
        if not self.sigma_max > self.sigma_min:
            raise DomainError(f'empty sigma range [{self.sigma_min}, {self.sigma_max}]')
        if self.steps < 2:
            raise DomainError(f'steps must be at least 2, got {self.steps}')
        if min(self.max_na, self.max_nb, self.max_nc) < 1 or self.max_nf not in (0, 1):
            raise DomainError('caps must be >= 1 for Na, Nb, Nc and 0 or 1 for Nf')

    @classmethod
    def from_config(cls, g: 'str | Number', config: dict | None = None, **overrides) -> 'ScanConfig':
        config = resolve(config)
        tol = config['tolerance']
        values = dict(
            steps=config['scan']['steps'],
            max_denominator=config['scan']['max_denominator'],
            energy_tol=tol['energy'],
            bisection_tol=tol['bisection'],
            dedup_tol=tol['crossing_dedup'],
        )
        values.update(overrides)
        return cls(parse_number(g), **values)

    @classmethod
    def figure2(cls, **overrides) -> 'ScanConfig':
        return cls(Fraction(2, 3), **{'max_na': 2, 'max_nb': 3, 'max_nc': 1, 'max_nf': 1, **overrides})

    @classmethod
    def figure3(cls, **overrides) -> 'ScanConfig':
        return cls(Fraction(4, 3), **{'max_na': 2, 'max_nb': 2, 'max_nc': 1, 'max_nf': 1, **overrides})

    def grid(self) -> np.ndarray:
        return np.linspace(self.sigma_min, self.sigma_max, self.steps)

    def states(self) -> list[StateLabel]:
        return [StateLabel(*s) for s in itertools.product(
            range(self.max_na + 1), range(self.max_nb + 1), range(self.max_nc + 1), range(self.max_nf + 1))]

    def to_dict(self) -> dict[str, Any]:
        return {
            'g': str(self.g), 'sigma_min': self.sigma_min, 'sigma_max': self.sigma_max, 'steps': self.steps,
            'caps': [self.max_na, self.max_nb, self.max_nc, self.max_nf],
            'energy_tol': self.energy_tol, 'max_denominator': self.max_denominator,
        }


class FrequencyRatio(NamedTuple):
    '''Coprime integers proportional to ``(w+, w-, wz, wg)``.'''
    n_plus: int
    n_minus: int
    n_z: int
    n_g: int

    def to_text(self) -> str:
        return ':'.join(str(n) for n in self)


class DegenerateGroup(NamedTuple):
    energy: Number
    members: tuple[StateLabel, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict[str, Any]:
        return {'energy': str(self.energy), 'multiplicity': self.multiplicity,
                'members': [list(m) for m in self.members]}


@dataclass(frozen=True)
class Crossing:
    '''A located crossing sigma with every state pair crossing there.'''
    sigma: float
    pairs: tuple[StatePair, ...]
    sigma_exact: Fraction | None = None
    ratio: FrequencyRatio | None = None
    case: str | None = None
    groups: tuple[DegenerateGroup, ...] = ()

    def to_dict(self) -> dict[str, Any]:
        return {
            'sigma': self.sigma,
            'sigma_exact': None if self.sigma_exact is None else str(self.sigma_exact),
            'ratio': None if self.ratio is None else list(self.ratio),
            'case': self.case,
            'pairs': [[list(a), list(b)] for a, b in self.pairs],
            'groups': [g.to_dict() for g in self.groups],
        }


@dataclass(frozen=True)
class LevelScan:
    sigmas: np.ndarray
    states: tuple[StateLabel, ...]
    energies: np.ndarray  # shape (len(sigmas), len(states))

    def rows(self) -> Iterable[tuple]:
        '''``(sigma, Na, Nb, Nc, Nf, energy)`` ordered by sigma then state.'''
        for i, sigma in enumerate(self.sigmas):
            for j, s in enumerate(self.states):
                yield (float(sigma), *s, float(self.energies[i, j]))


@dataclass(frozen=True)
class DegeneracyReport:
    config: ScanConfig
    crossings: tuple[Crossing, ...]
    persistent: tuple[StatePair, ...] = ()
    min_axial_magnetron_ratio: float = math.inf
    notes: tuple[str, ...] = field(default_factory=tuple)

    def crossing_sigmas(self) -> list[float]:
        return [c.sigma for c in self.crossings]

    def near(self, sigma: float, tol: float = 1e-6) -> Crossing | None:
        for c in self.crossings:
            if abs(c.sigma - sigma) <= tol:
                return c
        return None

    def to_dict(self) -> dict[str, Any]:
        return {
            'config': self.config.to_dict(),
            'crossings': [c.to_dict() for c in self.crossings],
            'persistent_pairs': [[list(a), list(b)] for a, b in self.persistent],
            'min_axial_magnetron_ratio': self.min_axial_magnetron_ratio,
            'notes': list(self.notes),
        }


# ---------------------------------------------------------------------------
# Frequencies on a grid
# ---------------------------------------------------------------------------

def _grid_frequencies(sigmas: np.ndarray, g: Number) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    omega = np.sqrt(sigmas ** 2 - 2.0)
    return (sigmas + omega) / 2, (sigmas - omega) / 2, abs(float(g)) * sigmas / 2


def axial_magnetron_margin(sigmas: np.ndarray) -> float:
    '''Smallest ``wz / w-`` over the grid; always above 1 since ``w- <= 1/sqrt(2)``.'''
    _, w_minus, _ = _grid_frequencies(np.asarray(sigmas, dtype=float), 0)
    return float(np.min(1.0 / w_minus))


def scan_levels(config: ScanConfig) -> LevelScan:
    '''Energies of every capped state at every grid sigma.'''
    sigmas = config.grid()
    states = tuple(config.states())
    occ = np.array(states, dtype=float)
    w_plus, w_minus, w_g = _grid_frequencies(sigmas, config.g)
    energies = (np.outer(w_plus, occ[:, 0] + 0.5) - np.outer(w_minus, occ[:, 1] + 0.5)
                + (occ[:, 2] + 0.5)[None, :] + np.outer(w_g, occ[:, 3] - 0.5))
    Logger.info(f'scan_levels: {len(states)} states on {len(sigmas)} grid points')
    return LevelScan(sigmas, states, energies)


# ---------------------------------------------------------------------------
# Crossings
# ---------------------------------------------------------------------------

def _canonical_difference(a: StateLabel, b: StateLabel) -> tuple[tuple[int, ...], bool]:
    d = tuple(x - y for x, y in zip(a, b))
    first = next((x for x in d if x), 0)
    if first < 0:
        return tuple(-x for x in d), True
    return d, False


def _difference_energy(d: Sequence[int], g: Number):
    da, db, dc, df = d
    gabs = abs(float(g))

    def f(sigma):
        omega = np.sqrt(sigma * sigma - 2.0)
        return sigma * (da - db) / 2 + omega * (da + db) / 2 + dc + gabs * sigma * df / 2
    return f


def _grouped_pairs(states: Sequence[StateLabel]) -> dict[tuple[int, ...], list[StatePair]]:
    groups: dict[tuple[int, ...], list[StatePair]] = defaultdict(list)
    for a, b in itertools.combinations(states, 2):
        d, _ = _canonical_difference(a, b)
        groups[d].append((a, b))
    return groups


def _roots(f, sigmas: np.ndarray, values: np.ndarray, xtol: float, zero_tol: float) -> list[float]:
    roots = [float(s) for s, v in zip(sigmas, values) if abs(v) <= zero_tol]
    signs = np.sign(values)
    for i in np.flatnonzero(signs[:-1] * signs[1:] < 0):
        roots.append(float(bisect(f, float(sigmas[i]), float(sigmas[i + 1]), xtol=xtol)))
    return roots


def _difference_roots(config: ScanConfig) -> tuple[dict[tuple[int, ...], list[float]], list[tuple[int, ...]]]:
    sigmas = config.grid()
    roots: dict[tuple[int, ...], list[float]] = {}
    persistent: list[tuple[int, ...]] = []
    for d in _grouped_pairs(config.states()):
        f = _difference_energy(d, config.g)
        values = f(sigmas)
        if np.all(np.abs(values) <= config.energy_tol):
            persistent.append(d)
            continue
        found = _roots(f, sigmas, values, config.bisection_tol, 1e-14 * max(1.0, float(np.max(np.abs(values)))))
        if found:
            roots[d] = found
    return roots, persistent


def persistent_pairs(config: ScanConfig) -> list[StatePair]:
    '''State pairs degenerate at every sigma (e.g. the ``g = 2`` spin ladders).'''
    _, persistent = _difference_roots(config)
    groups = _grouped_pairs(config.states())
    return sorted(p for d in persistent for p in groups[d])


def find_crossings(config: ScanConfig) -> list[Crossing]:
    '''Locate every level crossing in the window by bracketing and bisection.

    Roots closer than ``dedup_tol`` are merged into one crossing. Each
    crossing is snapped to a rational sigma with denominator at most
    ``max_denominator`` when one lies within ``dedup_tol`` and the exact
    energies agree there.
    '''
    roots, _ = _difference_roots(config)
    groups = _grouped_pairs(config.states())
    located: list[tuple[float, StatePair]] = []
    for d, rs in roots.items():
        for r in rs:
            located.extend((r, pair) for pair in groups[d])
    located.sort(key=lambda t: (t[0], t[1]))

    clusters: list[list[tuple[float, StatePair]]] = []
    for item in located:
        if clusters and item[0] - clusters[-1][-1][0] <= config.dedup_tol:
            clusters[-1].append(item)
        else:
            clusters.append([item])

    crossings = []
    for cluster in clusters:
        sigma = float(np.mean([r for r, _ in cluster]))
        pairs = tuple(sorted(set(p for _, p in cluster)))
        crossings.append(_annotate(sigma, pairs, config))
    Logger.info(f'find_crossings: {len(crossings)} crossings for g={config.g}')
    return crossings


def _snap(sigma: float, config: ScanConfig) -> Fraction | None:
    if not is_exact(config.g):
        return None
    candidate = Fraction(sigma).limit_denominator(config.max_denominator)
    if abs(float(candidate) - sigma) > config.dedup_tol or candidate * candidate <= 2:
        return None
    return candidate


def _annotate(sigma: float, pairs: tuple[StatePair, ...], config: ScanConfig) -> Crossing:
    exact = _snap(sigma, config)
    point = TrapParameters(exact if exact is not None else sigma, config.g)
    if exact is not None and not all(energy(a, point) == energy(b, point) for a, b in pairs):
        exact, point = None, TrapParameters(sigma, config.g)
    tol = 0.0 if point.exact else config.energy_tol
    groups = tuple(grp for grp in degenerate_groups(config.states(), point, tol) if grp.multiplicity > 1)
    return Crossing(
        sigma=float(exact) if exact is not None else sigma,
        pairs=pairs,
        sigma_exact=exact,
        ratio=detect_rational_ratios(point.sigma, config.g, config.max_denominator),
        case=classify_point(point.sigma, config.g),
        groups=groups,
    )


def degenerate_groups(states: Iterable[StateLabel], params: TrapParameters,
                      tol: float = 0.0) -> list[DegenerateGroup]:
    '''Partition *states* by energy; exact at exact points, else chained within *tol*.'''
    levels = sorted(((energy(s, params), s) for s in states), key=lambda t: (t[0], t[1]))
    out: list[list[tuple[Number, StateLabel]]] = []
    for e, s in levels:
        if out and (e == out[-1][-1][0] or (tol and abs(e - out[-1][-1][0]) <= tol)):
            out[-1].append((e, s))
        else:
            out.append([(e, s)])
    return [DegenerateGroup(grp[0][0], tuple(s for _, s in grp)) for grp in out]


# ---------------------------------------------------------------------------
# Ratios and classification
# ---------------------------------------------------------------------------

def detect_rational_ratios(sigma: 'str | Number', g: 'str | Number', maxden: int = 16,
                           tol: float = 1e-12) -> FrequencyRatio | None:
    '''Integer ratio ``w+ : w- : wz : wg`` with denominators (relative to wz) at most *maxden*.'''
    params = TrapParameters.parse(sigma, g)
    freqs = params.frequencies()
    approx = []
    for w in freqs:
        if isinstance(w, Fraction):
            r = w
            if r.denominator > maxden:
                return None
        else:
            r = Fraction(w).limit_denominator(maxden)
            if abs(float(r) - w) > tol * max(1.0, abs(w)):
                return None
        approx.append(r)
    lcm = math.lcm(*(r.denominator for r in approx))
    ints = [int(r * lcm) for r in approx]
    gcd = math.gcd(*ints)
    return FrequencyRatio(*(n // gcd for n in ints))


def _same(x: Number, y: Number, tol: float) -> bool:
    if is_exact(x, y):
        return x == y
    return abs(float(x) - float(y)) <= tol


def classify_point(sigma: 'str | Number', g: 'str | Number', tol: float = 1e-12) -> str | None:
    '''Catalog case realized at ``(sigma, g)``, or ``None``.'''
    params = TrapParameters.parse(sigma, g)
    w_plus, w_minus, w_z, w_g = params.frequencies()
    if _same(w_plus, w_z, tol):
        if _same(w_g, w_minus, tol):
            return 'so3_su11'
        if _same(w_g, w_z, tol):
            return 'su21'
        return None
    matches = [name for name, w in (('su11_plus', w_plus), ('su11_minus', w_minus), ('su11_axial', w_z))
               if _same(w_g, w, tol)]
    return matches[0] if len(matches) == 1 else None


# ---------------------------------------------------------------------------
# Full scan and figure data
# ---------------------------------------------------------------------------

def scan(config: ScanConfig) -> DegeneracyReport:
    '''Crossings, persistent pairs and the axial/magnetron separation over the window.'''
    crossings = find_crossings(config)
    persistent = persistent_pairs(config)
    margin = axial_magnetron_margin(config.grid())
    notes = []
    if persistent:
        notes.append(f'{len(persistent)} pairs are degenerate at every sigma')
    if margin <= 1.0:
        notes.append('axial and magnetron frequencies met on the grid')
    return DegeneracyReport(config, tuple(crossings), tuple(persistent), margin, tuple(notes))


@dataclass(frozen=True)
class Figure1Data:
    '''Frequency curves ``(sigma, w+, w-, wz, wg per g)`` and the checks they pass.'''
    g_values: tuple[Number, ...]
    rows: tuple[tuple[float, ...], ...]
    checks: dict[str, bool]

    @property
    def columns(self) -> list[str]:
        return ['sigma', 'omega_plus', 'omega_minus', 'omega_z'] + [f'omega_g_{g}' for g in self.g_values]


def _slopes_diverge(steps: Sequence[float] = (1e-2, 1e-4, 1e-6)) -> bool:
    slopes = []
    for h in steps:
        s0 = SQRT2 + h
        s1 = s0 + h / 10
        w0, _, _ = _grid_frequencies(np.array([s0, s1]), 0)
        slopes.append((w0[1] - w0[0]) / (s1 - s0))
    return all(b > 5 * a for a, b in zip(slopes, slopes[1:]))


def figure1_data(g_values: Sequence['str | Number'] = ('4/3', '2/3'), sigma_min: float = 1.415,
                 sigma_max: float = 3.0, steps: int = 600) -> Figure1Data:
    '''Frequency curves over sigma plus the exact three-way meeting at 3/2 for g = 4/3.'''
    if not sigma_min > SQRT2:
        raise DomainError(f'sigma_min must exceed sqrt(2), got {sigma_min}')
    gs = tuple(parse_number(g) for g in g_values)
    sigmas = np.linspace(sigma_min, sigma_max, steps)
    w_plus, w_minus, _ = _grid_frequencies(sigmas, 0)
    w_gs = [abs(float(g)) * sigmas / 2 for g in gs]
    rows = tuple((float(s), float(wp), float(wm), 1.0, *(float(w[i]) for w in w_gs))
                 for i, (s, wp, wm) in enumerate(zip(sigmas, w_plus, w_minus)))
    meet = TrapParameters(Fraction(3, 2), Fraction(4, 3))
    checks = {
        'slopes_diverge_at_sqrt2': _slopes_diverge(),
        'triple_meeting_at_3/2_for_g=4/3': meet.omega_plus == meet.omega_z == meet.omega_g,
        'omega_z_above_omega_minus': axial_magnetron_margin(sigmas) > 1.0,
        'product_w+_w-_is_1/2': bool(np.allclose(w_plus * w_minus, 0.5, rtol=0, atol=1e-12)),
    }
    return Figure1Data(gs, rows, checks)
