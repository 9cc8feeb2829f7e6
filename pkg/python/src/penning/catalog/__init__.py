'''Degeneracy superalgebras of the single-fermion Penning trap.

Example::

    from penning.catalog import catalog, verify_case

    su21 = catalog('su21')
    verify_case('su21').raise_on_failure()
'''
from penning.catalog.tables import (
    CASES,
    HIGHER_ORDER_POINT,
    UNIT_NAME,
    GeneratorSet,
    LinearCombination,
    RelationTable,
    catalog,
    higher_order_generators,
)
from penning.catalog.checks import (
    AB_SWAP_RENAME,
    AC_SWAP_RENAME,
    CheckResult,
    JacobiFailure,
    JacobiReport,
    LadderResult,
    StructureConstants,
    VerificationReport,
    bracket_label,
    centrality_checks,
    closure_report,
    commutes_with_hamiltonian,
    complete_set_identities,
    degeneracy_action_check,
    graded_jacobi_check,
    hamiltonian_checks,
    hermitian_pair_checks,
    higher_order_checks,
    ladder_action,
    numeric_cross_check,
    spin_flip_check,
    structure_constants,
    transport_check,
    verify_case,
    verify_relations,
)

__all__ = [
    'CASES',
    'HIGHER_ORDER_POINT',
    'UNIT_NAME',
    'GeneratorSet',
    'LinearCombination',
    'RelationTable',
    'catalog',
    'higher_order_generators',
    'AB_SWAP_RENAME',
    'AC_SWAP_RENAME',
    'CheckResult',
    'JacobiFailure',
    'JacobiReport',
    'LadderResult',
    'StructureConstants',
    'VerificationReport',
    'bracket_label',
    'centrality_checks',
    'closure_report',
    'commutes_with_hamiltonian',
    'complete_set_identities',
    'degeneracy_action_check',
    'graded_jacobi_check',
    'hamiltonian_checks',
    'hermitian_pair_checks',
    'higher_order_checks',
    'ladder_action',
    'numeric_cross_check',
    'spin_flip_check',
    'structure_constants',
    'transport_check',
    'verify_case',
    'verify_relations',
]
