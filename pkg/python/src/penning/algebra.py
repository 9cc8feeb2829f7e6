'''Exact normal-ordered operator algebra for three bosonic modes and one
fermionic mode.

Every operator is an :class:`OperatorPoly`: a map from :class:`Monomial`
to an exact :class:`~fractions.Fraction`. Monomials are stored in normal
order, so two equal operators always have identical maps and equality is
plain structural comparison.

Usage::

    from penning.algebra import A, AD, F, FD, supercommutator

    number_a = AD * A
    assert A * AD == number_a + 1
    assert supercommutator(FD, F) == 1

Text format
-----------
A polynomial prints as ``3/2 ad a + 1 bd f``: terms joined by ``+``/``-``,
each an explicit rational coefficient followed by symbol tokens from
``a ad b bd c cd f fd`` with optional integer powers (``ad^2``). Parsing
accepts symbols in any order and normal-orders the product, so
``parse('a ad')`` gives ``ad a + 1``.
'''
from __future__ import annotations

import enum
import functools
import itertools
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

from penning.errors import GradingError, ParseError, UnknownAutomorphismError

__all__ = [
    'Monomial',
    'OperatorPoly',
    'Grade',
    'Automorphism',
    'AUTOMORPHISMS',
    'SYMBOLS',
    'symbol',
    'multiply',
    'add',
    'scale',
    'equals',
    'supercommutator',
    'grade',
    'apply_automorphism',
    'parse',
    'A', 'AD', 'B', 'BD', 'C', 'CD', 'F', 'FD', 'ONE',
]

Scalar = Union[int, Fraction, Rational]

BOSON_MODES = ('a', 'b', 'c')


class Monomial(NamedTuple):
    '''Normal-ordered word ``(a†)^pa a^qa (b†)^pb b^qb (c†)^pc c^qc (f†)^pf f^qf``.'''
    pa: int = 0
    qa: int = 0
    pb: int = 0
    qb: int = 0
    pc: int = 0
    qc: int = 0
    pf: int = 0
    qf: int = 0

    @property
    def parity(self) -> int:
        return (self.pf + self.qf) % 2

    @property
    def degree(self) -> int:
        return sum(self)

    def mode(self, index: int) -> tuple[int, int]:
        '''(creation, annihilation) exponents of mode 0..3 (a, b, c, f).'''
        return self[2 * index], self[2 * index + 1]

    def dagger(self) -> 'Monomial':
        return Monomial(self.qa, self.pa, self.qb, self.pb, self.qc, self.pc, self.qf, self.pf)

    def shift(self) -> tuple[int, int, int, int]:
        '''Net change of (Na, Nb, Nc, Nf) when acting on a number state.'''
        return (self.pa - self.qa, self.pb - self.qb, self.pc - self.qc, self.pf - self.qf)

    def written_order(self) -> list[str]:
        '''Symbol tokens, creators first: ``ad bd cd fd f c b a``.'''
        tokens: list[str] = []
        for name, power in (('ad', self.pa), ('bd', self.pb), ('cd', self.pc), ('fd', self.pf),
                            ('f', self.qf), ('c', self.qc), ('b', self.qb), ('a', self.qa)):
            tokens.extend([name] * power)
        return tokens

    def to_text(self) -> str:
        parts = []
        for name, power in (('ad', self.pa), ('bd', self.pb), ('cd', self.pc), ('fd', self.pf),
                            ('f', self.qf), ('c', self.qc), ('b', self.qb), ('a', self.qa)):
            if power == 1:
                parts.append(name)
            elif power > 1:
                parts.append(f'{name}^{power}')
        return ' '.join(parts)


UNIT = Monomial()


class Grade(enum.Enum):
    EVEN = 'even'
    ODD = 'odd'
    MIXED = 'mixed'

    @property
    def parity(self) -> int:
        if self is Grade.MIXED:
            raise GradingError('mixed-grade operator has no parity')
        return 0 if self is Grade.EVEN else 1


# ---------------------------------------------------------------------------
# Mode-local reordering
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _boson_reorder(q: int, p: int) -> tuple[tuple[int, int, int], ...]:
    '''Normal-order ``x^q (x†)^p`` as terms ``(i, j, coeff)`` of ``(x†)^i x^j``.

    One swap at a time: ``x (x†)^p = (x†)^p x + p (x†)^(p-1)``.
    '''
    if q == 0 or p == 0:
        return ((p, q, 1),)
    terms: dict[tuple[int, int], int] = defaultdict(int)
    for i, j, coeff in _boson_reorder(q - 1, p):
        terms[(i, j + 1)] += coeff
    for i, j, coeff in _boson_reorder(q - 1, p - 1):
        terms[(i, j)] += p * coeff
    return tuple((i, j, coeff) for (i, j), coeff in sorted(terms.items()) if coeff)


def _fermion_reorder(q: int, p: int) -> tuple[tuple[int, int, int], ...]:
    # f f† = 1 - f† f
    if q and p:
        return ((0, 0, 1), (1, 1, -1))
    return ((p, q, 1),)


def _mode_product(left: tuple[int, int], right: tuple[int, int], fermionic: bool) -> list[tuple[int, int, int]]:
    p1, q1 = left
    p2, q2 = right
    reorder = _fermion_reorder if fermionic else _boson_reorder
    out = []
    for i, j, coeff in reorder(q1, p2):
        p, q = p1 + i, j + q2
        if fermionic and (p > 1 or q > 1):
            continue
        out.append((p, q, coeff))
    return out


@functools.lru_cache(maxsize=1 << 16)
def _monomial_product(m1: Monomial, m2: Monomial) -> tuple[tuple[Monomial, int], ...]:
    # Distinct modes commute; the single fermionic mode commutes with bosons.
    per_mode = [
        _mode_product(m1.mode(k), m2.mode(k), fermionic=(k == 3))
        for k in range(4)
    ]
    result = []
    for combo in itertools.product(*per_mode):
        coeff = 1
        exps: list[int] = []
        for p, q, c in combo:
            coeff *= c
            exps.extend((p, q))
        result.append((Monomial(*exps), coeff))
    return tuple(result)


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f'Exact rational coefficient required, got {type(value).__name__}')


# ---------------------------------------------------------------------------
# OperatorPoly
# ---------------------------------------------------------------------------

class OperatorPoly:
    '''Immutable normal-ordered polynomial with exact rational coefficients.

    Supports ``+``, ``-``, ``*`` (by polynomials and by exact scalars) and
    ``==`` against polynomials or scalars (a scalar means that multiple of
    the identity).
    '''

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] | None = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for mono, coeff in items:
            acc[Monomial(*mono)] += _as_fraction(coeff)
        self._terms = {m: c for m, c in acc.items() if c != 0}
        self._hash: int | None = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> 'OperatorPoly':
        return cls()

    @classmethod
    def constant(cls, value: Scalar) -> 'OperatorPoly':
        return cls({UNIT: value})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> 'OperatorPoly':
        return cls({mono: coeff})

    @classmethod
    def parse(cls, text: str) -> 'OperatorPoly':
        return parse(text)

    # -- views --------------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def monomials(self) -> list[Monomial]:
        '''Monomials in print order (highest degree first).'''
        return sorted(self._terms, key=lambda m: (m.degree, m), reverse=True)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient(UNIT)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def grade(self) -> Grade:
        parities = {m.parity for m in self._terms}
        if len(parities) > 1:
            return Grade.MIXED
        return Grade.ODD if parities == {1} else Grade.EVEN

    def dagger(self) -> 'OperatorPoly':
        '''Hermitian conjugate; coefficients are real.'''
        return OperatorPoly({m.dagger(): c for m, c in self._terms.items()})

    def max_raising(self) -> tuple[int, int, int]:
        '''Per-mode maximum creation exponent over all monomials (a, b, c).'''
        ra = rb = rc = 0
        for m in self._terms:
            ra, rb, rc = max(ra, m.pa), max(rb, m.pb), max(rc, m.pc)
        return ra, rb, rc

    # -- arithmetic ---------------------------------------------------------

    def add(self, other: 'OperatorPoly | Scalar') -> 'OperatorPoly':
        other = _coerce(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return OperatorPoly(acc)

    def scale(self, factor: Scalar) -> 'OperatorPoly':
        factor = _as_fraction(factor)
        return OperatorPoly({m: c * factor for m, c in self._terms.items()})

    def multiply(self, other: 'OperatorPoly | Scalar') -> 'OperatorPoly':
        other = _coerce(other)
        acc: dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                coeff = c1 * c2
                for mono, k in _monomial_product(m1, m2):
                    acc[mono] += coeff * k
        return OperatorPoly(acc)

    def equals(self, other: 'OperatorPoly | Scalar') -> bool:
        return self._terms == _coerce(other)._terms

    def __add__(self, other):
        if not isinstance(other, (OperatorPoly, int, Fraction, Rational)):
            return NotImplemented
        return self.add(other)

    __radd__ = __add__

    def __neg__(self) -> 'OperatorPoly':
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, (OperatorPoly, int, Fraction, Rational)):
            return NotImplemented
        return self.add(_coerce(other).scale(-1))

    def __rsub__(self, other):
        return _coerce(other).add(self.scale(-1))

    def __mul__(self, other):
        if isinstance(other, OperatorPoly):
            return self.multiply(other)
        if isinstance(other, (int, Fraction, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Rational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, power: int) -> 'OperatorPoly':
        if power < 0:
            raise ValueError('negative powers are not defined')
        result = OperatorPoly.constant(1)
        for _ in range(power):
            result = result.multiply(self)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (OperatorPoly, int, Fraction, Rational)):
            return self.equals(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        for m in self.monomials():
            yield m, self._terms[m]

    # -- text ---------------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return '0'
        pieces: list[str] = []
        for i, (mono, coeff) in enumerate(self):
            sign = '-' if coeff < 0 else '+'
            body = ' '.join(filter(None, [str(abs(coeff)), mono.to_text()]))
            if i == 0:
                pieces.append(body if sign == '+' else f'-{body}')
            else:
                pieces.append(f'{sign} {body}')
        return ' '.join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"OperatorPoly('{self.to_text()}')"


def _coerce(value: 'OperatorPoly | Scalar') -> OperatorPoly:
    if isinstance(value, OperatorPoly):
        return value
    return OperatorPoly.constant(value)


# ---------------------------------------------------------------------------
# Symbols
# ---------------------------------------------------------------------------

_SYMBOL_MONOMIALS = {
    'ad': Monomial(pa=1), 'a': Monomial(qa=1),
    'bd': Monomial(pb=1), 'b': Monomial(qb=1),
    'cd': Monomial(pc=1), 'c': Monomial(qc=1),
    'fd': Monomial(pf=1), 'f': Monomial(qf=1),
}

SYMBOLS = tuple(_SYMBOL_MONOMIALS)


def symbol(name: str) -> OperatorPoly:
    '''Ladder operator by token name (``a``, ``ad``, ..., ``f``, ``fd``).'''
    try:
        return OperatorPoly.monomial(_SYMBOL_MONOMIALS[name])
    except KeyError:
        raise ParseError(f'Unknown symbol {name!r}; expected one of {", ".join(SYMBOLS)}') from None


A, AD = symbol('a'), symbol('ad')
B, BD = symbol('b'), symbol('bd')
C, CD = symbol('c'), symbol('cd')
F, FD = symbol('f'), symbol('fd')
ONE = OperatorPoly.constant(1)


# ---------------------------------------------------------------------------
# Functional API
# ---------------------------------------------------------------------------

def multiply(p: OperatorPoly, q: OperatorPoly) -> OperatorPoly:
    '''Normal-ordered product ``p q``.'''
    return p.multiply(q)


def add(p: OperatorPoly, q: OperatorPoly) -> OperatorPoly:
    return p.add(q)


def scale(factor: Scalar, p: OperatorPoly) -> OperatorPoly:
    return p.scale(factor)


def equals(p: OperatorPoly, q: OperatorPoly) -> bool:
    return p.equals(q)


def grade(p: OperatorPoly) -> Grade:
    return p.grade()


def supercommutator(p: OperatorPoly, q: OperatorPoly) -> OperatorPoly:
    '''Graded bracket ``p q - (-1)^{|p||q|} q p``.

    Raises
    ------
    GradingError
        If either argument mixes even and odd monomials.
    '''
    gp, gq = p.grade(), q.grade()
    if Grade.MIXED in (gp, gq):
        raise GradingError(f'supercommutator needs definite grades, got [{p}, {q}]')
    pq = p.multiply(q)
    qp = q.multiply(p)
    if gp.parity and gq.parity:
        return pq + qp
    return pq - qp


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Automorphism:
    '''Relabelling of ladder symbols followed by re-normal-ordering.

    ``boson_perm[k]`` is the mode that mode ``k`` is sent to; ``flip_fermion``
    exchanges ``f`` and ``f†``.
    '''
    name: str
    boson_perm: tuple[int, int, int] = (0, 1, 2)
    flip_fermion: bool = False

    def apply_monomial(self, mono: Monomial) -> OperatorPoly:
        exps = [0] * 6
        for k in range(3):
            target = self.boson_perm[k]
            exps[2 * target], exps[2 * target + 1] = mono.mode(k)
        boson = Monomial(*exps, 0, 0)
        if not self.flip_fermion:
            return OperatorPoly.monomial(boson._replace(pf=mono.pf, qf=mono.qf))
        # (f†)^pf f^qf  ->  f^pf (f†)^qf, then normal-order
        word = OperatorPoly.monomial(Monomial(qf=mono.pf)).multiply(
            OperatorPoly.monomial(Monomial(pf=mono.qf)))
        return OperatorPoly.monomial(boson).multiply(word)

    def __call__(self, p: OperatorPoly) -> OperatorPoly:
        result = OperatorPoly()
        for mono, coeff in p.terms.items():
            result = result + self.apply_monomial(mono).scale(coeff)
        return result


AUTOMORPHISMS: dict[str, Automorphism] = {
    # a <-> b, a† <-> b†, f <-> f†
    'ab_swap': Automorphism('ab_swap', boson_perm=(1, 0, 2), flip_fermion=True),
    # f <-> f† only (sign of gq reversed)
    'spin_flip': Automorphism('spin_flip', flip_fermion=True),
    # a <-> c, a† <-> c†
    'ac_swap': Automorphism('ac_swap', boson_perm=(2, 1, 0)),
}


def apply_automorphism(p: OperatorPoly, name: str) -> OperatorPoly:
    '''Apply a named automorphism from :data:`AUTOMORPHISMS`.'''
    try:
        mapping = AUTOMORPHISMS[name]
    except KeyError:
        raise UnknownAutomorphismError(
            f'Unknown automorphism {name!r}; expected one of {", ".join(AUTOMORPHISMS)}') from None
    return mapping(p)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r'\s*(?:(?P<sign>[+-])|(?P<num>\d+(?:/\d+)?)|(?P<sym>[a-z]+)(?:\^(?P<pow>\d+))?)')


def parse(text: str) -> OperatorPoly:
    '''Parse the plain-text polynomial format (see module docstring).'''
    pos = 0
    text = text.strip()
    if text == '0':
        return OperatorPoly()
    result = OperatorPoly()
    sign = 1
    coeff: Fraction | None = None
    factors: list[OperatorPoly] = []
    seen_any = False

    def flush() -> OperatorPoly:
        if coeff is None and not factors:
            raise ParseError(f'Empty term in {text!r}')
        term = OperatorPoly.constant(sign * (coeff if coeff is not None else 1))
        for factor in factors:
            term = term.multiply(factor)
        return term

    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ParseError(f'Unexpected input at {pos}: {text[pos:]!r}')
        pos = match.end()
        if match['sign']:
            if seen_any:
                result = result + flush()
            elif coeff is not None or factors:
                raise ParseError(f'Misplaced sign in {text!r}')
            sign = -1 if match['sign'] == '-' else 1
            coeff, factors, seen_any = None, [], False
        elif match['num']:
            if coeff is not None or factors:
                raise ParseError(f'Coefficient must lead its term in {text!r}')
            try:
                coeff = Fraction(match['num'])
            except ZeroDivisionError:
                raise ParseError(f'Zero denominator in {text!r}') from None
            seen_any = True
        else:
            power = int(match['pow']) if match['pow'] else 1
            factors.append(symbol(match['sym']) ** power)
            seen_any = True
    if not seen_any:
        raise ParseError(f'Dangling sign or empty input in {text!r}')
    return result + flush()
