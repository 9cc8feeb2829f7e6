from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from penning.algebra import (
    A, AD, B, BD, C, CD, F, FD, ONE,
    AUTOMORPHISMS, Grade, Monomial, OperatorPoly,
    apply_automorphism, parse, supercommutator, symbol,
)
from penning.errors import GradingError, ParseError, UnknownAutomorphismError
from strategies import polys

small = settings(max_examples=60, deadline=None)


def graded_sign(x, y):
    return -1 if x.grade().parity and y.grade().parity else 1


@pytest.mark.basic
def test_canonical_commutation():
    assert A * AD == AD * A + 1
    assert (AD * A) * (AD * A) == AD ** 2 * A ** 2 + AD * A
    assert supercommutator(A, AD) == 1
    assert supercommutator(B, BD) == ONE
    assert supercommutator(C, CD) == 1
    assert supercommutator(A, BD).is_zero()
    assert supercommutator(AD, C).is_zero()


@pytest.mark.basic
def test_fermion_mode():
    assert (F * F).is_zero()
    assert (FD * FD).is_zero()
    assert F * FD + FD * F == 1
    assert supercommutator(F, FD) == 1
    assert supercommutator(F, F).is_zero()
    # bosons and the fermion commute
    assert A * F == F * A
    assert supercommutator(AD * F, A * FD) == AD * A + FD * F


@pytest.mark.basic
def test_boson_reordering():
    # a^2 (a†)^2 = (a†)^2 a^2 + 4 a† a + 2
    assert A ** 2 * AD ** 2 == AD ** 2 * A ** 2 + 4 * AD * A + 2
    assert supercommutator(AD * A, AD) == AD
    assert supercommutator(AD * A, A) == -A


@pytest.mark.basic
def test_text_format():
    assert (A * AD).to_text() == '1 ad a + 1'
    assert parse('3/2 ad a + 1 bd f').to_text() == '3/2 ad a + 1 bd f'
    assert (AD * C ** 2).monomials()[0].to_text() == 'ad c^2'
    assert OperatorPoly().to_text() == '0'
    assert parse('0').is_zero()
    assert parse('a ad') == AD * A + 1
    assert parse('- 2 a + b') == B - 2 * A
    assert parse('c^2 ad') == AD * C ** 2


@pytest.mark.basic
@pytest.mark.parametrize('text', ['', 'a +', 'x a', 'a 2', '1/0 a'])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)


@pytest.mark.basic
def test_symbol_lookup():
    assert symbol('cd') == CD
    with pytest.raises(ParseError):
        symbol('g')


@pytest.mark.basic
def test_grades():
    assert (AD * F).grade() is Grade.ODD
    assert (AD * A + FD * F).grade() is Grade.EVEN
    assert OperatorPoly().grade() is Grade.EVEN
    assert (A + F).grade() is Grade.MIXED
    with pytest.raises(GradingError):
        Grade.MIXED.parity
    with pytest.raises(GradingError):
        supercommutator(A + F, A)


@pytest.mark.basic
def test_dagger():
    assert (AD * C).dagger() == A * CD
    assert (AD * F).dagger() == A * FD
    assert (Fraction(1, 2) * (AD * A - CD * C)).dagger() == Fraction(1, 2) * (AD * A - CD * C)
    assert Monomial(pa=2, qc=1).dagger() == Monomial(qa=2, pc=1)


@pytest.mark.basic
def test_exact_coefficients_only():
    with pytest.raises(TypeError):
        A.scale(0.5)


@pytest.mark.basic
def test_max_raising():
    assert (AD ** 2 * C + BD * B).max_raising() == (2, 1, 0)
    assert (AD ** 2 * C).monomials()[0].shift() == (2, 0, -1, 0)


@pytest.mark.basic
def test_automorphisms():
    assert apply_automorphism(AD * A, 'ab_swap') == BD * B
    assert apply_automorphism(AD * F, 'ab_swap') == BD * FD
    assert apply_automorphism(FD * F, 'spin_flip') == 1 - FD * F
    assert apply_automorphism(AD * C, 'ac_swap') == CD * A
    with pytest.raises(UnknownAutomorphismError):
        apply_automorphism(A, 'mirror')


# ---------------------------------------------------------------------------
# algebraic laws
# ---------------------------------------------------------------------------

@small
@given(polys(max_degree=3, max_terms=2), polys(max_degree=3, max_terms=2), polys(max_degree=3, max_terms=2))
def test_associativity(p, q, r):
    assert (p * q) * r == p * (q * r)


@small
@given(polys(), polys(), polys())
def test_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (q + r) * p == q * p + r * p


@small
@given(st.sampled_from([0, 1]), st.sampled_from([0, 1]), st.data())
def test_graded_antisymmetry(px, py, data):
    x = data.draw(polys(max_degree=3, parity=px))
    y = data.draw(polys(max_degree=3, parity=py))
    assert supercommutator(x, y) == -graded_sign(x, y) * supercommutator(y, x)


@small
@given(st.sampled_from([0, 1]), st.sampled_from([0, 1]), st.sampled_from([0, 1]), st.data())
def test_graded_jacobi(px, py, pz, data):
    x = data.draw(polys(max_degree=2, max_terms=2, parity=px))
    y = data.draw(polys(max_degree=2, max_terms=2, parity=py))
    z = data.draw(polys(max_degree=2, max_terms=2, parity=pz))
    total = (
        graded_sign(x, z) * supercommutator(x, supercommutator(y, z))
        + graded_sign(y, x) * supercommutator(y, supercommutator(z, x))
        + graded_sign(z, y) * supercommutator(z, supercommutator(x, y))
    )
    assert total.is_zero()


@small
@given(polys(), polys())
def test_dagger_reverses_products(p, q):
    assert (p * q).dagger() == q.dagger() * p.dagger()


@small
@given(polys(), st.sampled_from(sorted(AUTOMORPHISMS)))
def test_automorphisms_are_involutions(p, name):
    assert apply_automorphism(apply_automorphism(p, name), name) == p


@small
@given(polys(max_terms=2), polys(max_terms=2), st.sampled_from(sorted(AUTOMORPHISMS)))
def test_automorphisms_preserve_products(p, q, name):
    image = apply_automorphism(p * q, name)
    assert image == apply_automorphism(p, name) * apply_automorphism(q, name)


@small
@given(polys())
def test_text_parses_back(p):
    assert parse(p.to_text()) == p
