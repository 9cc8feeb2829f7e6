"""Hypothesis strategies for normal-ordered operator polynomials."""
from fractions import Fraction

from hypothesis import strategies as st

from penning.algebra import Monomial, OperatorPoly

# fermion exponents (pf, qf) by parity
_FERMION_PARTS = {0: [(0, 0), (1, 1)], 1: [(1, 0), (0, 1)]}


@st.composite
def monomials(draw, max_degree=4, parity=None):
    """Normal-ordered monomials of total degree at most ``max_degree``."""
    if parity is None:
        parity = draw(st.sampled_from([0, 1]))
    pf, qf = draw(st.sampled_from(_FERMION_PARTS[parity]).filter(lambda f: sum(f) <= max_degree))
    slots = draw(st.lists(st.integers(0, 5), max_size=max_degree - pf - qf))
    exps = [0] * 6
    for s in slots:
        exps[s] += 1
    return Monomial(*exps, pf, qf)


coefficients = st.builds(
    Fraction,
    st.integers(-4, 4).filter(bool),
    st.integers(1, 3),
)


def polys(max_degree=4, max_terms=3, parity=None):
    """Polynomials with a few terms; ``parity`` makes them homogeneous."""
    return st.lists(
        st.tuples(monomials(max_degree, parity), coefficients),
        min_size=1,
        max_size=max_terms,
    ).map(OperatorPoly)
