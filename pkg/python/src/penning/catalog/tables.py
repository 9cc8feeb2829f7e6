'''Generator sets and relation tables for every degeneracy superalgebra of the trap.

Each case is a :class:`GeneratorSet`: named quadratic generators, the trap
points at which they commute with the hamiltonian, and the expected
(anti)commutation table. Relation right-hand sides are written as linear
combinations of generator names, e.g. ``'-1/3 H1 + 2/3 H2 + 1/3 H3'``; the
name ``1`` stands for the unit element.
'''
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Iterator, Mapping

from penning.algebra import (
    A, AD, B, BD, C, CD, F, FD,
    Grade, Monomial, OperatorPoly, apply_automorphism,
)
from penning.errors import GradingError, ParseError, UnknownCaseError
from penning.trap import TrapParameters

__all__ = [
    'CASES',
    'UNIT_NAME',
    'LinearCombination',
    'RelationTable',
    'GeneratorSet',
    'catalog',
    'higher_order_generators',
    'HIGHER_ORDER_POINT',
]

UNIT_NAME = '1'

CASES = ('su11_plus', 'su11_minus', 'su11_axial', 'so3_su11', 'su21', 'su211', 'osp26')

_RATIONAL = re.compile(r'^\d+(?:/\d+)?$')


# ---------------------------------------------------------------------------
# Linear combinations of generator names
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LinearCombination:
    '''Exact combination ``sum c_i G_i`` of generator names (``'1'`` is the unit).'''
    terms: tuple[tuple[str, Fraction], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[str, Fraction | int]) -> 'LinearCombination':
        return cls(tuple(sorted((n, Fraction(c)) for n, c in mapping.items() if c != 0)))

    @classmethod
    def parse(cls, text: str) -> 'LinearCombination':
        '''Whitespace-separated ``[sign] [coeff] name`` terms; ``'0'`` is empty.'''
        tokens = text.split()
        if tokens == ['0']:
            return cls()
        acc: dict[str, Fraction] = {}
        sign, coeff = 1, None
        expect_term = True
        for tok in tokens:
            if tok in ('+', '-'):
                if coeff is not None:
                    raise ParseError(f'Sign after coefficient in {text!r}')
                expect_term = True
                sign = -1 if tok == '-' else 1
            elif _RATIONAL.match(tok) and coeff is None:
                coeff = Fraction(tok)
            else:
                if not expect_term:
                    raise ParseError(f'Missing sign between terms in {text!r}')
                acc[tok] = acc.get(tok, Fraction(0)) + sign * (coeff if coeff is not None else 1)
                sign, coeff, expect_term = 1, None, False
        if coeff is not None:
            # trailing bare number is a unit multiple
            acc[UNIT_NAME] = acc.get(UNIT_NAME, Fraction(0)) + sign * coeff
        elif expect_term:
            raise ParseError(f'Dangling sign or empty combination in {text!r}')
        return cls.of(acc)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.terms)

    def scaled(self, factor: Fraction | int) -> 'LinearCombination':
        return LinearCombination.of({n: c * factor for n, c in self.terms})

    def renamed(self, mapping: Mapping[str, str]) -> 'LinearCombination':
        acc: dict[str, Fraction] = {}
        for n, c in self.terms:
            target = mapping.get(n, n)
            acc[target] = acc.get(target, Fraction(0)) + c
        return LinearCombination.of(acc)

    def evaluate(self, generators: Mapping[str, OperatorPoly]) -> OperatorPoly:
        total = OperatorPoly()
        for n, c in self.terms:
            if n == UNIT_NAME:
                total = total + c
            else:
                try:
                    total = total + generators[n].scale(c)
                except KeyError:
                    raise UnknownCaseError(f'Relation refers to unknown generator {n!r}') from None
        return total

    def is_zero(self) -> bool:
        return not self.terms

    def to_text(self) -> str:
        if not self.terms:
            return '0'
        pieces = []
        for i, (n, c) in enumerate(self.terms):
            mag = abs(c)
            body = str(mag) if n == UNIT_NAME else (n if mag == 1 else f'{mag} {n}')
            if i == 0:
                pieces.append(body if c > 0 else f'- {body}')
            else:
                pieces.append(f'{"+" if c > 0 else "-"} {body}')
        return ' '.join(pieces)

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class RelationTable:
    '''Expected brackets ``[x, y}``; unlisted pairs vanish when ``complete``.

    An entry for ``(x, y)`` also fixes ``(y, x)`` through graded antisymmetry.
    '''
    entries: Mapping[tuple[str, str], LinearCombination]
    complete: bool = True

    @classmethod
    def from_text(cls, rows: Mapping[tuple[str, str], str], complete: bool = True) -> 'RelationTable':
        return cls({pair: LinearCombination.parse(text) for pair, text in rows.items()}, complete)

    def lookup(self, x: str, y: str, both_odd: bool) -> LinearCombination | None:
        '''Expected ``[x, y}``; ``None`` when the table is silent and incomplete.'''
        if (x, y) in self.entries:
            return self.entries[(x, y)]
        if (y, x) in self.entries:
            return self.entries[(y, x)].scaled(1 if both_odd else -1)
        return LinearCombination() if self.complete else None

    def renamed(self, mapping: Mapping[str, str]) -> 'RelationTable':
        return RelationTable(
            {(mapping.get(x, x), mapping.get(y, y)): comb.renamed(mapping)
             for (x, y), comb in self.entries.items()},
            self.complete)

    def names(self) -> set[str]:
        out: set[str] = set()
        for (x, y), comb in self.entries.items():
            out.update((x, y))
            out.update(n for n, _ in comb.terms if n != UNIT_NAME)
        return out

    def __len__(self) -> int:
        return len(self.entries)


# ---------------------------------------------------------------------------
# GeneratorSet
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GeneratorSet:
    '''A named degeneracy superalgebra.

    Args:
        case: case id, one of :data:`CASES`.
        generators: insertion-ordered map name -> operator.
        relations: expected bracket table, ``None`` when only closure is checked.
        points: trap points at which every generator commutes with the hamiltonian.
        central: names expected to supercommute with the whole set.
        hermitian_pairs: ``(X, Y)`` with ``X† = Y``.
        reference: operator to commute with when no trap point realizes the set.
    '''
    case: str
    generators: Mapping[str, OperatorPoly]
    relations: RelationTable | None = None
    points: tuple[TrapParameters, ...] = ()
    central: tuple[str, ...] = ()
    hermitian_pairs: tuple[tuple[str, str], ...] = ()
    reference: OperatorPoly | None = None
    title: str = ''
    _grades: dict[str, Grade] = field(init=False, repr=False, default_factory=dict)

    def __post_init__(self):
        for name, gen in self.generators.items():
            g = gen.grade()
            if g is Grade.MIXED:
                raise GradingError(f'{self.case}: generator {name} = {gen} has mixed grade')
            self._grades[name] = g
        if self.relations is not None:
            unknown = self.relations.names() - set(self.generators)
            if unknown:
                raise UnknownCaseError(f'{self.case}: relation table names unknown generators {sorted(unknown)}')

    @property
    def names(self) -> list[str]:
        return list(self.generators)

    def __getitem__(self, name: str) -> OperatorPoly:
        try:
            return self.generators[name]
        except KeyError:
            raise UnknownCaseError(f'{self.case} has no generator {name!r}; have {", ".join(self.generators)}') from None

    def __contains__(self, name: str) -> bool:
        return name in self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[tuple[str, OperatorPoly]]:
        return iter(self.generators.items())

    def grade(self, name: str) -> Grade:
        self[name]
        return self._grades[name]

    def even_names(self) -> list[str]:
        return [n for n in self.generators if self._grades[n] is Grade.EVEN]

    def odd_names(self) -> list[str]:
        return [n for n in self.generators if self._grades[n] is Grade.ODD]

    def pairs(self) -> Iterator[tuple[str, str]]:
        '''Unordered generator pairs including squares, in generator order.'''
        return itertools.combinations_with_replacement(self.generators, 2)

    def without(self, *names: str) -> 'GeneratorSet':
        '''Copy with *names* removed; the relation table is dropped.'''
        for n in names:
            self[n]
        kept = {n: g for n, g in self.generators.items() if n not in names}
        return replace(self, case=f'{self.case}-minus-{"-".join(names)}', generators=kept, relations=None,
                       central=tuple(c for c in self.central if c not in names),
                       hermitian_pairs=tuple(p for p in self.hermitian_pairs if not set(p) & set(names)))

    def transported(self, automorphism: str, rename: Mapping[str, str] | None = None,
                    case: str | None = None) -> 'GeneratorSet':
        '''Image under a named automorphism with the relation table carried along.

        ``rename`` relabels the images (e.g. ``J -> Kbar`` for ``ab_swap``).
        '''
        rename = dict(rename or {})
        images = {rename.get(n, n): apply_automorphism(g, automorphism) for n, g in self.generators.items()}
        relations = self.relations.renamed(rename) if self.relations is not None else None
        return replace(
            self,
            case=case or f'{self.case}@{automorphism}',
            generators=images,
            relations=relations,
            points=(),
            central=tuple(rename.get(n, n) for n in self.central),
            hermitian_pairs=tuple((rename.get(x, x), rename.get(y, y)) for x, y in self.hermitian_pairs),
            reference=apply_automorphism(self.reference, automorphism) if self.reference is not None else None,
        )


# ---------------------------------------------------------------------------
# Cases
# ---------------------------------------------------------------------------

def _point(sigma: str, g: str) -> TrapParameters:
    return TrapParameters.parse(sigma, g)


def _su11_plus() -> GeneratorSet:
    na, nf = AD * A, FD * F
    return GeneratorSet(
        case='su11_plus',
        title='u(1) x su(1|1), spin flip with a modified-cyclotron quantum (wg = w+)',
        generators={
            'J': na + nf,
            'Jbar': na - nf + 1,
            'F+1': AD * F,
            'F-1': A * FD,
        },
        relations=RelationTable.from_text({
            ('Jbar', 'F+1'): '2 F+1',
            ('Jbar', 'F-1'): '- 2 F-1',
            ('F+1', 'F-1'): 'J',
        }),
        points=(_point('11/6', '18/11'),),
        central=('J',),
        hermitian_pairs=(('F+1', 'F-1'),),
    )


def _su11_minus() -> GeneratorSet:
    nb, nf = BD * B, FD * F
    return GeneratorSet(
        case='su11_minus',
        title='u(1) x su(1|1), spin flip with a magnetron quantum (wg = w-)',
        generators={
            'K': nb + nf,
            'Kbar': nb - nf + 1,
            'F+2': BD * FD,
            'F-2': B * F,
        },
        relations=RelationTable.from_text({
            ('K', 'F+2'): '2 F+2',
            ('K', 'F-2'): '- 2 F-2',
            ('F+2', 'F-2'): 'Kbar',
        }),
        points=(_point('9/4', '2/9'),),
        central=('Kbar',),
        hermitian_pairs=(('F+2', 'F-2'),),
    )


def _su11_axial() -> GeneratorSet:
    nc, nf = CD * C, FD * F
    return GeneratorSet(
        case='su11_axial',
        title='u(1) x su(1|1), spin flip with an axial quantum (wg = wz)',
        generators={
            'N3': nc + nf,
            'N3bar': nc - nf + 1,
            'F+3': CD * F,
            'F-3': C * FD,
        },
        relations=RelationTable.from_text({
            ('N3bar', 'F+3'): '2 F+3',
            ('N3bar', 'F-3'): '- 2 F-3',
            ('F+3', 'F-3'): 'N3',
        }),
        points=(_point('9/4', '8/9'),),
        central=('N3',),
        hermitian_pairs=(('F+3', 'F-3'),),
    )


_SO3_TABLE = {
    ('L', 'E+2'): 'E+2',
    ('L', 'E-2'): '- E-2',
    ('E+2', 'E-2'): '2 L',
}


def _so3_generators() -> dict[str, OperatorPoly]:
    na, nc = AD * A, CD * C
    return {
        'Lbar': na + nc + 1,
        'L': Fraction(1, 2) * (na - nc),
        'E+2': AD * C,
        'E-2': A * CD,
    }


def _so3_su11() -> GeneratorSet:
    minus = _su11_minus()
    entries = {**RelationTable.from_text(_SO3_TABLE).entries, **minus.relations.entries}
    return GeneratorSet(
        case='so3_su11',
        title='u(1) x so(3) + u(1) x su(1|1) at the supersymmetric point, g = 2/3',
        generators={**_so3_generators(), **minus.generators},
        relations=RelationTable(entries),
        points=(_point('3/2', '2/3'),),
        central=('Lbar', 'Kbar'),
        hermitian_pairs=(('E+2', 'E-2'), ('F+2', 'F-2')),
    )


def _su21() -> GeneratorSet:
    na, nb, nc, nf = AD * A, BD * B, CD * C, FD * F
    half = Fraction(1, 2)
    so3 = _so3_generators()
    return GeneratorSet(
        case='su21',
        title='u(1) x u(1) x su(2|1) at the supersymmetric point, g = 4/3',
        generators={
            'M': na + nc + nf + half,
            'Mbar': nb + half,
            'Ltilde': half * (na + nc) + nf,
            'L': so3['L'],
            'E+2': so3['E+2'],
            'E-2': so3['E-2'],
            'F+1': AD * F,
            'F-1': A * FD,
            'F+3': CD * F,
            'F-3': C * FD,
        },
        relations=RelationTable.from_text({
            **_SO3_TABLE,
            ('F+1', 'F-1'): 'Ltilde + L',
            ('F+3', 'F-3'): 'Ltilde - L',
            ('F+1', 'F-3'): 'E+2',
            ('F-1', 'F+3'): 'E-2',
            ('Ltilde', 'F+1'): '- 1/2 F+1',
            ('Ltilde', 'F-1'): '1/2 F-1',
            ('Ltilde', 'F+3'): '- 1/2 F+3',
            ('Ltilde', 'F-3'): '1/2 F-3',
            ('L', 'F+1'): '1/2 F+1',
            ('L', 'F-1'): '- 1/2 F-1',
            ('L', 'F+3'): '- 1/2 F+3',
            ('L', 'F-3'): '1/2 F-3',
            ('E+2', 'F+3'): 'F+1',
            ('E-2', 'F-3'): '- F-1',
            ('E+2', 'F-1'): '- F-3',
            ('E-2', 'F+1'): 'F+3',
        }),
        points=(_point('3/2', '4/3'),),
        central=('M', 'Mbar'),
        hermitian_pairs=(('E+2', 'E-2'), ('F+1', 'F-1'), ('F+3', 'F-3')),
    )


def _su211() -> GeneratorSet:
    na, nb, nc, nf = AD * A, BD * B, CD * C, FD * F
    h0 = na - nb + nc + nf
    return GeneratorSet(
        case='su211',
        title='u(1) x su(2,1|1) for four equal frequencies (not realized by any trap point)',
        generators={
            'H0': h0,
            'H1': nb + nc + 1,
            'H2': na + nb + 1,
            'H3': na - nb + nc + 3 * nf - 1,
            'E+1': BD * CD,
            'E-1': B * C,
            'E+2': AD * C,
            'E-2': A * CD,
            'E+3': AD * BD,
            'E-3': A * B,
            'F+1': AD * F,
            'F-1': A * FD,
            'F+2': BD * FD,
            'F-2': B * F,
            'F+3': CD * F,
            'F-3': C * FD,
        },
        relations=RelationTable.from_text({
            # Cartan action: [H, X] = (weight of X) X
            ('H1', 'E+1'): '2 E+1', ('H1', 'E-1'): '- 2 E-1',
            ('H1', 'E+2'): '- E+2', ('H1', 'E-2'): 'E-2',
            ('H1', 'E+3'): 'E+3', ('H1', 'E-3'): '- E-3',
            ('H1', 'F+2'): 'F+2', ('H1', 'F-2'): '- F-2',
            ('H1', 'F+3'): 'F+3', ('H1', 'F-3'): '- F-3',
            ('H2', 'E+1'): 'E+1', ('H2', 'E-1'): '- E-1',
            ('H2', 'E+2'): 'E+2', ('H2', 'E-2'): '- E-2',
            ('H2', 'E+3'): '2 E+3', ('H2', 'E-3'): '- 2 E-3',
            ('H2', 'F+1'): 'F+1', ('H2', 'F-1'): '- F-1',
            ('H2', 'F+2'): 'F+2', ('H2', 'F-2'): '- F-2',
            ('H3', 'F+1'): '- 2 F+1', ('H3', 'F-1'): '2 F-1',
            ('H3', 'F+2'): '2 F+2', ('H3', 'F-2'): '- 2 F-2',
            ('H3', 'F+3'): '- 2 F+3', ('H3', 'F-3'): '2 F-3',
            # su(2,1)
            ('E+1', 'E-1'): '- H1',
            ('E+2', 'E-2'): 'H2 - H1',
            ('E+3', 'E-3'): '- H2',
            ('E+1', 'E+2'): '- E+3',
            ('E+1', 'E-3'): '- E-2',
            ('E-1', 'E-2'): 'E-3',
            ('E-1', 'E+3'): 'E+2',
            ('E+2', 'E-3'): '- E-1',
            ('E-2', 'E+3'): 'E+1',
            # even on odd
            ('E+1', 'F-2'): '- F+3',
            ('E+1', 'F-3'): '- F+2',
            ('E-1', 'F+2'): 'F-3',
            ('E-1', 'F+3'): 'F-2',
            ('E+2', 'F-1'): '- F-3',
            ('E+2', 'F+3'): 'F+1',
            ('E-2', 'F+1'): 'F+3',
            ('E-2', 'F-3'): '- F-1',
            ('E+3', 'F-1'): '- F+2',
            ('E+3', 'F-2'): '- F+1',
            ('E-3', 'F+1'): 'F-2',
            ('E-3', 'F+2'): 'F-1',
            # odd with odd
            ('F+1', 'F-1'): '- 1/3 H1 + 2/3 H2 + 1/3 H3',
            ('F+2', 'F-2'): '1/3 H1 + 1/3 H2 - 1/3 H3',
            ('F+3', 'F-3'): '2/3 H1 - 1/3 H2 + 1/3 H3',
            ('F+1', 'F+2'): 'E+3',
            ('F+1', 'F-3'): 'E+2',
            ('F-1', 'F-2'): 'E-3',
            ('F-1', 'F+3'): 'E-2',
            ('F+2', 'F+3'): 'E+1',
            ('F-2', 'F-3'): 'E-1',
        }),
        central=('H0',),
        hermitian_pairs=(('E+1', 'E-1'), ('E+2', 'E-2'), ('E+3', 'E-3'),
                         ('F+1', 'F-1'), ('F+2', 'F-2'), ('F+3', 'F-3')),
        reference=h0,
    )


_BOSON_LETTERS = (('ad', Monomial(pa=1)), ('a', Monomial(qa=1)),
                  ('bd', Monomial(pb=1)), ('b', Monomial(qb=1)),
                  ('cd', Monomial(pc=1)), ('c', Monomial(qc=1)))


def _osp26() -> GeneratorSet:
    gens: dict[str, OperatorPoly] = {}
    letters = [OperatorPoly.monomial(m) for _, m in _BOSON_LETTERS]
    # 21 symmetric bosonic quadratics, kept as their normal-ordered monomial
    for x, y in itertools.combinations_with_replacement(letters, 2):
        product = x * y
        mono = max(product.monomials(), key=lambda m: m.degree)
        gens[mono.to_text()] = OperatorPoly.monomial(mono)
    nf = FD * F
    gens[next(iter(nf.terms)).to_text()] = nf
    for x in letters:
        for fermion in (F, FD):
            odd = x * fermion
            gens[next(iter(odd.terms)).to_text()] = odd
    pairs = []
    for name, gen in gens.items():
        partner = next(iter(gen.dagger().terms)).to_text()
        if name < partner:
            pairs.append((name, partner))
    return GeneratorSet(
        case='osp26',
        title='osp(2|6): every quadratic in the ladder operators, for all trap parameters',
        generators=gens,
        relations=None,
        hermitian_pairs=tuple(pairs),
    )


_BUILDERS: dict[str, Callable[[], GeneratorSet]] = {
    'su11_plus': _su11_plus,
    'su11_minus': _su11_minus,
    'su11_axial': _su11_axial,
    'so3_su11': _so3_su11,
    'su21': _su21,
    'su211': _su211,
    'osp26': _osp26,
}


def catalog(case: str) -> GeneratorSet:
    '''Generator set for a case id.

    Raises:
        UnknownCaseError: if *case* is not in :data:`CASES`.
    '''
    try:
        builder = _BUILDERS[case]
    except KeyError:
        raise UnknownCaseError(f'Unknown case {case!r}; expected one of {", ".join(CASES)}') from None
    return builder()


# ---------------------------------------------------------------------------
# Higher-order commuting operators at sigma = 9/4, g = 2/3 (ratio 8:1:4:3)
# ---------------------------------------------------------------------------

HIGHER_ORDER_POINT = ('9/4', '2/3')


def higher_order_generators() -> dict[str, OperatorPoly]:
    '''Monomials beyond quadratic order that commute with the hamiltonian at 9/4, 2/3.'''
    polys = (
        AD * C ** 2, A * CD ** 2,
        BD ** 4 * CD, B ** 4 * C,
        A * B ** 8, AD * BD ** 8,
        B * C * FD,
    )
    return {p.monomials()[0].to_text(): p for p in polys}
