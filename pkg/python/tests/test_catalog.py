import dataclasses
import math
from fractions import Fraction

import pytest

from penning.algebra import A, F, Grade, supercommutator
from penning.catalog import (
    AB_SWAP_RENAME,
    AC_SWAP_RENAME,
    CASES,
    GeneratorSet,
    LinearCombination,
    RelationTable,
    catalog,
    closure_report,
    commutes_with_hamiltonian,
    complete_set_identities,
    degeneracy_action_check,
    graded_jacobi_check,
    hermitian_pair_checks,
    higher_order_checks,
    higher_order_generators,
    ladder_action,
    numeric_cross_check,
    spin_flip_check,
    structure_constants,
    transport_check,
    verify_case,
    verify_relations,
)
from penning.errors import FailedRelation, GradingError, NotClosedError, ParseError, UnknownCaseError
from penning.fock import FockBasis
from penning.trap import StateLabel, TrapParameters

TABLE_CASES = [c for c in CASES if c != 'osp26']


@pytest.mark.basic
def test_generator_counts():
    sizes = {case: len(catalog(case)) for case in CASES}
    assert sizes == {
        'su11_plus': 4, 'su11_minus': 4, 'su11_axial': 4,
        'so3_su11': 8, 'su21': 10, 'su211': 16, 'osp26': 34,
    }
    osp = catalog('osp26')
    assert len(osp.even_names()) == 22
    assert len(osp.odd_names()) == 12


@pytest.mark.basic
def test_unknown_case():
    with pytest.raises(UnknownCaseError):
        catalog('bogus')
    with pytest.raises(UnknownCaseError):
        catalog('su21')['nope']


@pytest.mark.basic
def test_generator_grades():
    su21 = catalog('su21')
    assert su21.grade('F+1') is Grade.ODD
    assert su21.grade('L') is Grade.EVEN
    with pytest.raises(GradingError):
        GeneratorSet(case='mixed', generators={'bad': A + F})


@pytest.mark.basic
def test_linear_combination_text():
    comb = LinearCombination.parse('- 1/3 H1 + 2/3 H2 + 1/3 H3')
    assert comb.as_dict() == {'H1': Fraction(-1, 3), 'H2': Fraction(2, 3), 'H3': Fraction(1, 3)}
    assert LinearCombination.parse(comb.to_text()) == comb
    assert LinearCombination.parse('- 2 F-2').to_text() == '- 2 F-2'
    assert LinearCombination.parse('Ltilde + L').as_dict() == {'L': 1, 'Ltilde': 1}
    assert LinearCombination.parse('1/2').as_dict() == {'1': 0.5}
    assert LinearCombination.parse('0').is_zero()
    for bad in ['+', 'H1 H2', '']:
        with pytest.raises(ParseError):
            LinearCombination.parse(bad)


@pytest.mark.basic
def test_relation_lookup_antisymmetry():
    table = catalog('su21').relations
    assert table.lookup('L', 'E-2', False) == LinearCombination.parse('- E-2')
    assert table.lookup('E-2', 'L', False) == LinearCombination.parse('E-2')
    assert table.lookup('F-1', 'F+1', True) == LinearCombination.parse('Ltilde + L')
    assert table.lookup('M', 'L', False).is_zero()
    incomplete = RelationTable(table.entries, complete=False)
    assert incomplete.lookup('M', 'L', False) is None


@pytest.mark.basic
def test_unknown_names_in_table():
    gs = catalog('su11_plus')
    with pytest.raises(UnknownCaseError):
        dataclasses.replace(gs, relations=RelationTable.from_text({('J', 'X'): 'J'}))


@pytest.mark.basic
@pytest.mark.parametrize('case', TABLE_CASES)
def test_relation_tables_exact(case):
    gs = catalog(case)
    report = verify_relations(gs)
    n = len(gs)
    assert len(report) == n * (n + 1) // 2
    assert report.ok, [r.identity for r in report.failures()]


@pytest.mark.basic
def test_wrong_relation_is_reported():
    gs = catalog('su11_plus')
    broken = dataclasses.replace(gs, relations=RelationTable.from_text({
        ('Jbar', 'F+1'): '2 F+1',
        ('Jbar', 'F-1'): '- 2 F-1',
        ('F+1', 'F-1'): 'Jbar',
    }))
    report = verify_relations(broken)
    assert not report.ok
    [failure] = report.failures()
    assert failure.identity == '{F+1, F-1} = Jbar'
    with pytest.raises(FailedRelation):
        report.raise_on_failure()


@pytest.mark.basic
def test_structure_constants_su21():
    gs = catalog('su21')
    sc = structure_constants(gs)
    assert sc[('F+1', 'F-1')] == LinearCombination.parse('Ltilde + L')
    assert sc[('E+2', 'E-2')] == LinearCombination.parse('2 L')
    assert sc[('E-2', 'E+2')] == LinearCombination.parse('- 2 L')
    for (x, y), comb in sc.nonzero().items():
        assert comb.evaluate(gs.generators) == supercommutator(gs[x], gs[y])


@pytest.mark.basic
def test_closure_fails_without_cartan_element():
    trimmed = catalog('so3_su11').without('L')
    with pytest.raises(NotClosedError) as info:
        structure_constants(trimmed)
    assert info.value.pair == ('E+2', 'E-2')
    assert not info.value.residual.is_zero()
    assert not closure_report(trimmed).ok


@pytest.mark.basic
def test_closure_survives_dropping_a_lowering_operator():
    # L, E+2 and the rest still close: a Borel subalgebra
    assert closure_report(catalog('so3_su11').without('E-2')).ok


@pytest.mark.basic
@pytest.mark.parametrize('case', TABLE_CASES)
def test_graded_jacobi(case):
    report = graded_jacobi_check(case)
    assert report.ok
    n = len(catalog(case))
    # one representative per cyclic class
    assert report.triples_checked == (n ** 3 + 2 * n) // 3


@pytest.mark.slow
def test_osp26_closure_and_jacobi():
    sc = structure_constants('osp26')
    assert len(sc.basis) == 35
    assert graded_jacobi_check('osp26').ok


@pytest.mark.slow
def test_osp26_verify():
    report = verify_case('osp26')
    assert report.ok


@pytest.mark.basic
@pytest.mark.parametrize('case', ['su11_plus', 'su11_minus', 'su11_axial', 'so3_su11', 'su21'])
def test_generators_commute_with_hamiltonian(case):
    gs = catalog(case)
    [point] = gs.points
    assert all(commutes_with_hamiltonian(gen, point) for _, gen in gs)


@pytest.mark.basic
def test_generator_breaks_off_its_point():
    su21 = catalog('su21')
    assert not commutes_with_hamiltonian(su21['F+1'], TrapParameters('3/2', '2/3'))


@pytest.mark.basic
def test_higher_order_generators():
    gens = higher_order_generators()
    assert len(gens) == 7
    assert {'ad c^2', 'cd^2 a', 'bd^4 cd', 'c b^4', 'b^8 a', 'ad bd^8', 'fd c b'} == set(gens)
    report = higher_order_checks()
    assert report.ok and len(report) == 7


@pytest.mark.basic
def test_complete_sets():
    for case in ('so3_su11', 'su21'):
        report = complete_set_identities(case)
        assert report.ok, [r.identity for r in report.failures()]
    so3 = complete_set_identities('so3_su11')
    variant = [r for r in so3.results if 'variant' in r.note]
    assert len(variant) == 1 and not variant[0].difference.is_zero()
    with pytest.raises(UnknownCaseError):
        complete_set_identities('su11_plus')


@pytest.mark.basic
def test_transport():
    assert transport_check('su11_plus', 'ab_swap', AB_SWAP_RENAME, 'su11_minus').ok
    assert transport_check('su11_plus', 'ac_swap', AC_SWAP_RENAME, 'su11_axial').ok


@pytest.mark.basic
@pytest.mark.parametrize('case', ['so3_su11', 'su21'])
def test_spin_flip(case):
    assert spin_flip_check(case).ok


@pytest.mark.basic
def test_ladder_action():
    hit = ladder_action('F+1', (0, 0, 0, 1), 'su21')
    assert hit == (StateLabel(1, 0, 0, 0), 1.0)
    assert ladder_action('F+1', (0, 0, 0, 0), 'su21') is None
    assert ladder_action('L', (1, 0, 0, 0), 'su21') == (StateLabel(1, 0, 0, 0), 0.5)
    moved = ladder_action('E+2', (0, 0, 2, 0), 'su21')
    assert moved.state == StateLabel(1, 0, 1, 0)
    assert moved.amplitude == pytest.approx(math.sqrt(2))


@pytest.mark.basic
@pytest.mark.parametrize('case', ['su11_plus', 'so3_su11', 'su21'])
def test_generators_link_degenerate_states(case):
    report = degeneracy_action_check(case)
    assert len(report) == len(catalog(case))
    assert report.ok


@pytest.mark.basic
@pytest.mark.parametrize('case', CASES)
def test_hermitian_pairs(case):
    assert hermitian_pair_checks(case, FockBasis.uniform(3)).ok


@pytest.mark.parametrize('case', TABLE_CASES)
def test_numeric_cross_check(case):
    report = numeric_cross_check(case, cutoff=8)
    assert report.ok, [r.identity for r in report.failures()]
    assert report.results
    assert all(isinstance(r.numeric_residual, float) for r in report.results)
    assert all(r.numeric_residual < 1e-12 for r in report.results)
    assert any(r.identity.startswith('M(') for r in report.results) == bool(catalog(case).hermitian_pairs)


@pytest.mark.basic
def test_hermitian_pair_checks_numeric_only():
    basis = FockBasis.uniform(4)
    mixed = hermitian_pair_checks('su21', basis)
    numeric = hermitian_pair_checks('su21', basis, exact=False)
    assert len(mixed.results) == 2 * len(numeric.results) > 0
    assert all(r.numeric_residual is not None for r in numeric.results)
    assert all(r.numeric_residual is None for r in hermitian_pair_checks('su21').results)


@pytest.mark.basic
@pytest.mark.parametrize('case', TABLE_CASES)
def test_verify_case(case):
    report = verify_case(case)
    assert report.ok, [r.identity for r in report.failures()]
    assert report.to_dict()['failed'] == 0
