'''Exact verification of the catalog: relation tables, closure, Jacobi,
hamiltonian commutation, complete-set identities and automorphism transport.

Every check returns a :class:`VerificationReport`; nothing raises unless
:meth:`VerificationReport.raise_on_failure` is called. The optional numeric
cross-check compares the same identities on truncated Fock matrices.
'''
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping, NamedTuple, Sequence

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from penning.algebra import Grade, OperatorPoly, apply_automorphism, supercommutator
from penning.catalog.tables import (
    HIGHER_ORDER_POINT,
    UNIT_NAME,
    GeneratorSet,
    LinearCombination,
    catalog,
    higher_order_generators,
)
from penning.config import resolve
from penning.errors import FailedRelation, InvalidQuantumNumbers, NotClosedError, UnknownCaseError, UnsupportedError
from penning.fock import FockBasis, check_bracket_numeric, to_matrix
from penning.logger import Logger
from penning.trap import (
    StateLabel,
    TrapParameters,
    constants_of_motion,
    energy,
    hamiltonian_poly,
    reversed_spin_hamiltonian,
)
from penning.workers import parallel_map

__all__ = [
    'CheckResult',
    'VerificationReport',
    'StructureConstants',
    'JacobiFailure',
    'JacobiReport',
    'LadderResult',
    'bracket_label',
    'verify_relations',
    'commutes_with_hamiltonian',
    'hamiltonian_checks',
    'higher_order_checks',
    'centrality_checks',
    'hermitian_pair_checks',
    'structure_constants',
    'closure_report',
    'graded_jacobi_check',
    'ladder_action',
    'degeneracy_action_check',
    'complete_set_identities',
    'transport_check',
    'spin_flip_check',
    'numeric_cross_check',
    'verify_case',
    'AB_SWAP_RENAME',
    'AC_SWAP_RENAME',
]

# su11_plus -> su11_minus under a <-> b, f <-> f†
AB_SWAP_RENAME = {'J': 'Kbar', 'Jbar': 'K', 'F+1': 'F+2', 'F-1': 'F-2'}
# su11_plus -> su11_axial under a <-> c
AC_SWAP_RENAME = {'J': 'N3', 'Jbar': 'N3bar', 'F+1': 'F+3', 'F-1': 'F-3'}


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    '''One checked identity.

    ``difference`` is the exact ``lhs - rhs`` polynomial; numeric checks
    carry ``numeric_residual`` instead.
    '''
    case: str
    identity: str
    passed: bool
    difference: OperatorPoly = field(default_factory=OperatorPoly)
    numeric_residual: float | None = None
    note: str = ''

    @classmethod
    def exact(cls, case: str, identity: str, difference: OperatorPoly,
              expected: OperatorPoly | None = None, note: str = '') -> 'CheckResult':
        target = expected if expected is not None else OperatorPoly()
        return cls(case, identity, difference == target, difference, note=note)

    @classmethod
    def numeric(cls, case: str, identity: str, residual: float, tol: float) -> 'CheckResult':
        residual = float(residual)
        return cls(case, identity, residual <= tol, numeric_residual=residual)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {'case': self.case, 'identity': self.identity, 'passed': self.passed}
        if self.numeric_residual is not None:
            out['residual'] = self.numeric_residual
        else:
            out['residual'] = self.difference.to_text()
        if self.note:
            out['note'] = self.note
        return out


@dataclass
class VerificationReport:
    title: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def extend(self, other: 'VerificationReport | Iterable[CheckResult]') -> 'VerificationReport':
        self.results.extend(other.results if isinstance(other, VerificationReport) else other)
        return self

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def raise_on_failure(self) -> None:
        '''Raise :class:`FailedRelation` for the first failing identity.'''
        for r in self.results:
            if not r.passed:
                Logger.error(f'{self.title}: {r.identity} failed')
                raise FailedRelation(f'{r.case}: {r.identity}', r.difference)

    def __len__(self) -> int:
        return len(self.results)

    def to_dict(self) -> dict[str, Any]:
        return {
            'title': self.title,
            'ok': self.ok,
            'checked': len(self.results),
            'failed': len(self.failures()),
            'results': [r.to_dict() for r in self.results],
        }


def bracket_label(x: str, y: str, both_odd: bool, rhs: str) -> str:
    return f'{{{x}, {y}}} = {rhs}' if both_odd else f'[{x}, {y}] = {rhs}'


def _resolve_set(case: 'str | GeneratorSet') -> GeneratorSet:
    return case if isinstance(case, GeneratorSet) else catalog(case)


def _bracket(pair: tuple[OperatorPoly, OperatorPoly]) -> OperatorPoly:
    return supercommutator(*pair)


def _grade_consistent(gs: GeneratorSet, x: str, y: str, result: OperatorPoly) -> bool:
    if result.is_zero():
        return True
    expected = Grade.ODD if gs.grade(x).parity ^ gs.grade(y).parity else Grade.EVEN
    return result.grade() is expected


# ---------------------------------------------------------------------------
# Relation tables
# ---------------------------------------------------------------------------

def verify_relations(case: 'str | GeneratorSet', config: dict | None = None) -> VerificationReport:
    '''Compare every pairwise bracket with the relation table, unlisted pairs included.'''
    gs = _resolve_set(case)
    report = VerificationReport(f'relations {gs.case}')
    if gs.relations is None:
        Logger.info(f'{gs.case}: no relation table, closure is checked by structure_constants')
        return report
    pairs = list(gs.pairs())
    brackets = parallel_map(_bracket, [(gs[x], gs[y]) for x, y in pairs], config)
    for (x, y), result in zip(pairs, brackets):
        both_odd = bool(gs.grade(x).parity and gs.grade(y).parity)
        expected = gs.relations.lookup(x, y, both_odd)
        if expected is None:
            continue
        label = bracket_label(x, y, both_odd, expected.to_text())
        note = '' if _grade_consistent(gs, x, y, result) else 'bracket grade inconsistent'
        diff = result - expected.evaluate(gs.generators)
        report.add(CheckResult(gs.case, label, diff.is_zero() and not note, diff, note=note))
    Logger.info(f'{gs.case}: {len(report)} brackets checked, {len(report.failures())} failed')
    return report


# ---------------------------------------------------------------------------
# Hamiltonian commutation
# ---------------------------------------------------------------------------

def commutes_with_hamiltonian(gen: OperatorPoly, params: TrapParameters) -> bool:
    '''True iff ``[H, gen}`` vanishes exactly.

    Raises:
        UnsupportedError: if the frequencies at *params* are not exact.
    '''
    return supercommutator(hamiltonian_poly(params), gen).is_zero()


def hamiltonian_checks(case: 'str | GeneratorSet') -> VerificationReport:
    gs = _resolve_set(case)
    report = VerificationReport(f'hamiltonian {gs.case}')
    targets: list[tuple[str, OperatorPoly]] = [(f'H({p})', hamiltonian_poly(p)) for p in gs.points]
    if gs.reference is not None:
        targets.append(('reference', gs.reference))
    for label, h in targets:
        for name, gen in gs:
            diff = supercommutator(h, gen)
            report.add(CheckResult.exact(gs.case, f'[{label}, {name}] = 0', diff))
    return report


def higher_order_checks(sigma: str = HIGHER_ORDER_POINT[0], g: str = HIGHER_ORDER_POINT[1]) -> VerificationReport:
    '''Commutation of the beyond-quadratic generators with ``H``; no closure is attempted.'''
    params = TrapParameters.parse(sigma, g)
    h = hamiltonian_poly(params)
    report = VerificationReport(f'higher order at {params}')
    for name, gen in higher_order_generators().items():
        report.add(CheckResult.exact('higher_order', f'[H({params}), {name}] = 0', supercommutator(h, gen)))
    return report


def centrality_checks(case: 'str | GeneratorSet') -> VerificationReport:
    gs = _resolve_set(case)
    report = VerificationReport(f'centrality {gs.case}')
    for c in gs.central:
        for name, gen in gs:
            if name == c:
                continue
            report.add(CheckResult.exact(gs.case, f'[{c}, {name}] = 0', supercommutator(gs[c], gen)))
    return report


def hermitian_pair_checks(case: 'str | GeneratorSet', basis: FockBasis | None = None,
                          tol: float = 1e-12, exact: bool = True) -> VerificationReport:
    '''``X† = Y`` exactly, and ``M(X)^T = M(Y)`` on *basis* when given.

    ``exact=False`` keeps only the matrix comparisons.
    '''
    gs = _resolve_set(case)
    report = VerificationReport(f'hermitian pairs {gs.case}')
    for x, y in gs.hermitian_pairs:
        if exact:
            report.add(CheckResult.exact(gs.case, f'{x}^dagger = {y}', gs[x].dagger() - gs[y]))
        if basis is not None:
            residual = (to_matrix(gs[x], basis).transpose() - to_matrix(gs[y], basis)).max_abs()
            report.add(CheckResult.numeric(gs.case, f'M({x})^T = M({y})', residual, tol))
    return report


# ---------------------------------------------------------------------------
# Closure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureConstants:
    '''Each bracket ``[x, y}`` as a combination of the generators and the unit.'''
    case: str
    basis: tuple[str, ...]
    brackets: Mapping[tuple[str, str], LinearCombination]

    def __getitem__(self, pair: tuple[str, str]) -> LinearCombination:
        try:
            return self.brackets[pair]
        except KeyError:
            raise UnknownCaseError(f'{self.case}: no bracket for {pair}') from None

    def nonzero(self) -> dict[tuple[str, str], LinearCombination]:
        return {p: c for p, c in self.brackets.items() if not c.is_zero()}


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _rref(columns: Sequence[OperatorPoly]) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    rows = sorted({m for col in columns for m in col.terms})
    index = {m: i for i, m in enumerate(rows)}
    dense = [[QQ.zero] * len(columns) for _ in rows]
    for j, col in enumerate(columns):
        for m, c in col.terms.items():
            dense[index[m]][j] = _to_qq(c)
    if not rows:
        return [], ()
    reduced, pivots = DomainMatrix(dense, (len(rows), len(columns)), QQ).rref()
    return [[_from_qq(v) for v in row] for row in reduced.to_list()], tuple(pivots)


def _solve_in_span(basis_polys: Sequence[OperatorPoly], target: OperatorPoly) -> tuple[list[Fraction], OperatorPoly]:
    '''Coefficients of *target* over *basis_polys* and the out-of-span residual.'''
    nb = len(basis_polys)
    reduced, pivots = _rref(list(basis_polys) + [target])
    coeffs = [Fraction(0)] * nb
    for r, p in enumerate(pivots):
        if p < nb:
            coeffs[p] = reduced[r][nb]
    approx = OperatorPoly()
    for c, poly in zip(coeffs, basis_polys):
        approx = approx + poly.scale(c)
    return coeffs, target - approx


def structure_constants(case: 'str | GeneratorSet', config: dict | None = None) -> StructureConstants:
    '''Solve every bracket in ``span(generators) + unit`` with one exact row reduction.

    Raises:
        NotClosedError: if some bracket leaves the span.
    '''
    gs = _resolve_set(case)
    names = gs.names
    basis_names = tuple(names) + (UNIT_NAME,)
    basis_polys = [gs[n] for n in names] + [OperatorPoly.constant(1)]
    pairs = list(gs.pairs())
    brackets = parallel_map(_bracket, [(gs[x], gs[y]) for x, y in pairs], config)

    distinct: dict[OperatorPoly, int] = {}
    for b in brackets:
        if not b.is_zero() and b not in distinct:
            distinct[b] = len(distinct)
    targets = list(distinct)
    nb = len(basis_polys)
    reduced, pivots = _rref(basis_polys + targets)
    pivot_row = {p: r for r, p in enumerate(pivots)}

    solutions: dict[OperatorPoly, LinearCombination] = {}
    for t, poly in enumerate(targets):
        col = nb + t
        if col in pivot_row:
            pair = next(p for p, b in zip(pairs, brackets) if b == poly)
            _, residual = _solve_in_span(basis_polys, poly)
            Logger.error(f'{gs.case}: bracket {pair} leaves the span')
            raise NotClosedError(pair, residual)
        coeffs = {basis_names[p]: reduced[r][col] for p, r in pivot_row.items() if p < nb}
        solutions[poly] = LinearCombination.of(coeffs)

    table: dict[tuple[str, str], LinearCombination] = {}
    for (x, y), b in zip(pairs, brackets):
        comb = LinearCombination() if b.is_zero() else solutions[b]
        table[(x, y)] = comb
        if x != y:
            both_odd = bool(gs.grade(x).parity and gs.grade(y).parity)
            table[(y, x)] = comb if both_odd else comb.scaled(-1)
    Logger.info(f'{gs.case}: {len(pairs)} brackets close over {len(basis_names)} basis elements')
    return StructureConstants(gs.case, basis_names, table)


def closure_report(case: 'str | GeneratorSet', config: dict | None = None) -> VerificationReport:
    gs = _resolve_set(case)
    report = VerificationReport(f'closure {gs.case}')
    try:
        sc = structure_constants(gs, config)
    except NotClosedError as e:
        report.add(CheckResult.exact(gs.case, f'{e.pair} closes', e.residual))
        return report
    report.add(CheckResult(gs.case, f'{len(gs)} generators closed over span + unit '
                                    f'({len(gs.even_names())} even, {len(gs.odd_names())} odd)', True,
                           note=f'{len(sc.nonzero())} nonzero ordered brackets'))
    return report


# ---------------------------------------------------------------------------
# Graded Jacobi
# ---------------------------------------------------------------------------

class JacobiFailure(NamedTuple):
    triple: tuple[str, str, str]
    residual: OperatorPoly


@dataclass(frozen=True)
class JacobiReport:
    case: str
    triples_checked: int
    failures: tuple[JacobiFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_report(self) -> VerificationReport:
        report = VerificationReport(f'graded Jacobi {self.case}')
        report.add(CheckResult(self.case, f'graded Jacobi over {self.triples_checked} cyclic triples',
                               self.ok, note=f'{len(self.failures)} failing'))
        for f in self.failures:
            report.add(CheckResult.exact(self.case, f'Jacobi{f.triple} = 0', f.residual))
        return report


def _is_cyclic_rep(i: int, j: int, k: int) -> bool:
    t = (i, j, k)
    return t <= (j, k, i) and t <= (k, i, j)


def _jacobi_for_first(i: int, polys: Sequence[OperatorPoly], parities: Sequence[int]) -> list[tuple[int, int, int, OperatorPoly]]:
    n = len(polys)

    @functools.lru_cache(maxsize=None)
    def pair(a: int, b: int) -> OperatorPoly:
        return supercommutator(polys[a], polys[b])

    failures = []
    for j in range(n):
        for k in range(n):
            if not _is_cyclic_rep(i, j, k):
                continue
            pi, pj, pk = parities[i], parities[j], parities[k]
            total = (supercommutator(polys[i], pair(j, k)).scale((-1) ** (pi * pk))
                     + supercommutator(polys[j], pair(k, i)).scale((-1) ** (pj * pi))
                     + supercommutator(polys[k], pair(i, j)).scale((-1) ** (pk * pj)))
            if not total.is_zero():
                failures.append((i, j, k, total))
    return failures


def graded_jacobi_check(case: 'str | GeneratorSet', config: dict | None = None) -> JacobiReport:
    '''Graded Jacobi sum over all ordered triples.

    The sum is invariant under cyclic rotation of the triple, so one
    representative per rotation class is evaluated.
    '''
    gs = _resolve_set(case)
    names = gs.names
    polys = [gs[n] for n in names]
    parities = [gs.grade(n).parity for n in names]
    n = len(names)
    task = functools.partial(_jacobi_for_first, polys=polys, parities=parities)
    per_first = parallel_map(task, range(n), config)
    checked = sum(1 for i, j, k in itertools.product(range(n), repeat=3) if _is_cyclic_rep(i, j, k))
    failures = tuple(JacobiFailure((names[i], names[j], names[k]), r)
                     for batch in per_first for i, j, k, r in batch)
    Logger.info(f'{gs.case}: graded Jacobi over {checked} triples, {len(failures)} failing')
    return JacobiReport(gs.case, checked, failures)


# ---------------------------------------------------------------------------
# Action on number states
# ---------------------------------------------------------------------------

class LadderResult(NamedTuple):
    state: StateLabel
    amplitude: float


def ladder_action(name: str, state: 'StateLabel | Sequence[int]', case: 'str | GeneratorSet',
                  basis: FockBasis | None = None) -> LadderResult | None:
    '''Apply a monomial generator to a number state.

    Returns ``None`` when the result vanishes.

    Raises:
        InvalidQuantumNumbers: if *state* lies outside *basis*.
    '''
    gs = _resolve_set(case)
    gen = gs[name]
    s = StateLabel(*state).validate()
    if basis is None:
        ra, rb, rc = gen.max_raising()
        basis = FockBasis(s.na + ra + 1, s.nb + rb + 1, s.nc + rc + 1)
    vec = np.zeros(basis.dim)
    vec[basis.index(s)] = 1.0
    out = to_matrix(gen, basis).apply(vec)
    hits = np.flatnonzero(out)
    if hits.size == 0:
        return None
    if hits.size > 1:
        raise UnsupportedError(f'{name} = {gen} maps {s.to_text()} to a superposition')
    i = int(hits[0])
    return LadderResult(StateLabel(*basis.state(i)), float(out[i]))


def degeneracy_action_check(case: 'str | GeneratorSet', cutoff: int = 4, tol: float = 0.0) -> VerificationReport:
    '''Generators only link states of equal energy at the case's trap points.'''
    gs = _resolve_set(case)
    report = VerificationReport(f'degeneracy action {gs.case}')
    for name, gen in gs:
        ra, rb, rc = gen.max_raising()
        basis = FockBasis(cutoff + ra, cutoff + rb, cutoff + rc)
        links = []
        for (row, col) in to_matrix(gen, basis).entries():
            source = basis.state(col)
            if max(source[:3]) < cutoff:
                links.append((source, basis.state(row)))
        for params in gs.points:
            worst = max((abs(energy(t, params) - energy(s, params)) for s, t in links), default=0)
            report.add(CheckResult.numeric(gs.case, f'E({name} s) = E(s) at {params}', float(worst), tol))
    return report


# ---------------------------------------------------------------------------
# Complete sets of commuting operators
# ---------------------------------------------------------------------------

_COMPLETE_SETS: dict[str, tuple[tuple[str, str], list[tuple[str, str, str]]]] = {
    'so3_su11': (('3/2', '2/3'), [
        ('Lbar', '2 Hrho + 2/3 Hphi + Hz', ''),
        ('L', 'Hrho + 1/3 Hphi - 1/2 Hz', ''),
        ('Kbar', '2 Hrho - 2/3 Hphi - 2 Hf', ''),
        ('K', '2 Hrho - 2/3 Hphi + 2 Hf', 'sign of Hphi corrected; the +2/3 form leaves -4/3 Hphi'),
        ('K - Kbar', '4 Hf', ''),
    ]),
    'su21': (('3/2', '4/3'), [
        ('Mbar', '2 Hrho - 2/3 Hphi', ''),
        ('M', '2 Hrho + 2/3 Hphi + Hz + Hf', ''),
        ('Ltilde', 'Hrho + 1/3 Hphi + 1/2 Hz + Hf', ''),
        ('L', 'Hrho + 1/3 Hphi - 1/2 Hz', ''),
        ('Hf', '2 Ltilde - M', ''),
    ]),
}

# +2/3 Hphi variant of the K identity, checked against its known residual
_VARIANT_K = ('K', '2 Hrho + 2/3 Hphi + 2 Hf', '- 4/3 Hphi')


def complete_set_identities(case: str) -> VerificationReport:
    '''Generators of *case* rewritten through the constants of motion, exactly.'''
    try:
        (sigma, g), rows = _COMPLETE_SETS[case]
    except KeyError:
        raise UnknownCaseError(
            f'complete-set identities exist for {", ".join(_COMPLETE_SETS)}, not {case!r}') from None
    gs = catalog(case)
    params = TrapParameters.parse(sigma, g)
    cs = constants_of_motion(params)
    names: dict[str, OperatorPoly] = {**gs.generators, **cs.as_dict(), 'H': hamiltonian_poly(params)}
    report = VerificationReport(f'complete set {case} at {params}')
    report.add(CheckResult.exact(case, 'H = Hrho + Hphi + Hz + Hf', names['H'] - cs.total()))
    for lhs, rhs, note in rows:
        diff = LinearCombination.parse(lhs).evaluate(names) - LinearCombination.parse(rhs).evaluate(names)
        report.add(CheckResult.exact(case, f'{lhs} = {rhs}', diff, note=note))
    if case == 'so3_su11':
        lhs, rhs, expected = _VARIANT_K
        diff = LinearCombination.parse(lhs).evaluate(names) - LinearCombination.parse(rhs).evaluate(names)
        report.add(CheckResult.exact(case, f'{lhs} - ({rhs}) = {expected}', diff,
                                     expected=LinearCombination.parse(expected).evaluate(names),
                                     note='sign variant, residual recorded'))
    for a, b in itertools.combinations(cs.as_dict(), 2):
        report.add(CheckResult.exact(case, f'[{a}, {b}] = 0', supercommutator(names[a], names[b])))
    return report


# ---------------------------------------------------------------------------
# Automorphism transport
# ---------------------------------------------------------------------------

def transport_check(source: str, automorphism: str, rename: Mapping[str, str], target: str) -> VerificationReport:
    '''Images of *source* equal *target*'s generators and carry its relation table.'''
    src = catalog(source)
    moved = src.transported(automorphism, rename, case=f'{source}->{target}')
    tgt = catalog(target)
    report = VerificationReport(f'{automorphism}: {source} -> {target}')
    origin = {v: k for k, v in rename.items()}
    for name, image in moved:
        report.add(CheckResult.exact(tgt.case, f'{automorphism}({origin.get(name, name)}) = {name}', image - tgt[name]))
    for x, y in tgt.pairs():
        both_odd = bool(tgt.grade(x).parity and tgt.grade(y).parity)
        mine = moved.relations.lookup(x, y, both_odd)
        theirs = tgt.relations.lookup(x, y, both_odd)
        diff = mine.evaluate(tgt.generators) - theirs.evaluate(tgt.generators)
        report.add(CheckResult.exact(tgt.case, f'table {bracket_label(x, y, both_odd, theirs.to_text())}', diff))
    for name, gen in src:
        twice = apply_automorphism(apply_automorphism(gen, automorphism), automorphism)
        report.add(CheckResult.exact(src.case, f'{automorphism}^2({name}) = {name}', twice - gen))
    return report


def spin_flip_check(case: str, config: dict | None = None) -> VerificationReport:
    '''Relation table and commutation survive ``f <-> f†`` (the ``gq < 0`` trap).'''
    gs = catalog(case)
    flipped = gs.transported('spin_flip')
    report = VerificationReport(f'spin_flip {case}')
    report.extend(verify_relations(flipped, config))
    for params in gs.points:
        h = reversed_spin_hamiltonian(params)
        for name, gen in flipped:
            report.add(CheckResult.exact(flipped.case, f'[H_flip({params}), {name}] = 0', supercommutator(h, gen)))
    return report


# ---------------------------------------------------------------------------
# Numeric oracle
# ---------------------------------------------------------------------------

def numeric_cross_check(case: 'str | GeneratorSet', cutoff: int | None = None,
                        config: dict | None = None) -> VerificationReport:
    '''Every bracket of the set, recomputed on truncated Fock matrices.'''
    config = resolve(config)
    gs = _resolve_set(case)
    cutoff = cutoff or config['fock']['cutoff']
    tol = config['tolerance']['numeric']
    basis = FockBasis.uniform(cutoff)
    report = VerificationReport(f'numeric {gs.case} at cutoff {cutoff}')
    for x, y in gs.pairs():
        both_odd = bool(gs.grade(x).parity and gs.grade(y).parity)
        comb = gs.relations.lookup(x, y, both_odd) if gs.relations is not None else None
        expected = comb.evaluate(gs.generators) if comb is not None else supercommutator(gs[x], gs[y])
        rhs = comb.to_text() if comb is not None else 'engine'
        try:
            residual = check_bracket_numeric(gs[x], gs[y], expected, basis)
        except InvalidQuantumNumbers as e:
            Logger.warn(f'{gs.case}: skipping {x}, {y}: {e}')
            continue
        report.add(CheckResult.numeric(gs.case, bracket_label(x, y, both_odd, rhs), residual, tol))
    report.extend(hermitian_pair_checks(gs, basis, tol, exact=False).results)
    return report


def verify_case(case: str, numeric: bool = False, cutoff: int | None = None,
                config: dict | None = None) -> VerificationReport:
    '''All checks that apply to *case*, merged in a fixed order.'''
    gs = catalog(case)
    Logger.info(f'verify {case}: {len(gs)} generators')
    report = VerificationReport(f'verify {case}')
    report.extend(verify_relations(gs, config))
    report.extend(closure_report(gs, config))
    report.extend(graded_jacobi_check(gs, config).to_report())
    report.extend(hamiltonian_checks(gs))
    report.extend(centrality_checks(gs))
    report.extend(hermitian_pair_checks(gs))
    if case in _COMPLETE_SETS:
        report.extend(complete_set_identities(case))
        report.extend(spin_flip_check(case, config))
    if case == 'su11_minus':
        report.extend(transport_check('su11_plus', 'ab_swap', AB_SWAP_RENAME, 'su11_minus'))
    if case == 'su11_axial':
        report.extend(transport_check('su11_plus', 'ac_swap', AC_SWAP_RENAME, 'su11_axial'))
    if numeric:
        report.extend(numeric_cross_check(gs, cutoff, config))
    Logger.info(f'verify {case}: {len(report)} checks, {len(report.failures())} failed')
    return report
