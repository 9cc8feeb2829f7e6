'''Truncated Fock-space matrices used as a numeric oracle for the exact engine.

Basis states ``|Na, Nb, Nc, Nf>`` are indexed lexicographically,
``index = ((Na * Cb + Nb) * Cc + Nc) * 2 + Nf``, which is the index order of
``kron(A, kron(B, kron(C, F)))``.

Usage::

    from penning.algebra import A, AD, ONE
    from penning.fock import FockBasis, check_bracket_numeric

    basis = FockBasis(8, 8, 8)
    residual = check_bracket_numeric(A, AD, ONE, basis)
    assert residual < 1e-12
'''
from __future__ import annotations

import functools
import io
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np
import scipy.sparse as sparse

from penning.algebra import Grade, Monomial, OperatorPoly
from penning.errors import GradingError, InvalidQuantumNumbers

__all__ = [
    'FockBasis',
    'SparseOperator',
    'ladder_matrix',
    'to_matrix',
    'interior_projector',
    'auto_margin',
    'check_relation_numeric',
    'numeric_supercommutator',
    'check_bracket_numeric',
]

_SYMBOL_SLOT = {'a': 0, 'ad': 0, 'b': 1, 'bd': 1, 'c': 2, 'cd': 2, 'f': 3, 'fd': 3}


@dataclass(frozen=True)
class FockBasis:
    '''Truncated basis with bosonic cutoffs (Ca, Cb, Cc) and one fermion mode.'''
    ca: int
    cb: int
    cc: int

    def __post_init__(self):
        if min(self.ca, self.cb, self.cc) < 1:
            raise InvalidQuantumNumbers(f'Fock cutoffs must be positive, got {self.cutoffs}')

    @classmethod
    def uniform(cls, cutoff: int) -> 'FockBasis':
        return cls(cutoff, cutoff, cutoff)

    @property
    def cutoffs(self) -> tuple[int, int, int]:
        return self.ca, self.cb, self.cc

    @property
    def dim(self) -> int:
        return self.ca * self.cb * self.cc * 2

    def contains(self, state: Sequence[int]) -> bool:
        na, nb, nc, nf = state
        return 0 <= na < self.ca and 0 <= nb < self.cb and 0 <= nc < self.cc and nf in (0, 1)

    def index(self, state: Sequence[int]) -> int:
        if not self.contains(state):
            raise InvalidQuantumNumbers(f'State {tuple(state)} lies outside cutoffs {self.cutoffs}')
        na, nb, nc, nf = state
        return ((na * self.cb + nb) * self.cc + nc) * 2 + nf

    def state(self, index: int) -> tuple[int, int, int, int]:
        if not 0 <= index < self.dim:
            raise InvalidQuantumNumbers(f'Index {index} outside basis of dimension {self.dim}')
        index, nf = divmod(index, 2)
        index, nc = divmod(index, self.cc)
        na, nb = divmod(index, self.cb)
        return na, nb, nc, nf

    def states(self) -> Iterator[tuple[int, int, int, int]]:
        for i in range(self.dim):
            yield self.state(i)

    def _mode_dims(self) -> tuple[int, int, int, int]:
        return self.ca, self.cb, self.cc, 2


class SparseOperator:
    '''Real sparse matrix on a :class:`FockBasis`; explicit zeros are dropped.'''

    __slots__ = ('_matrix',)

    def __init__(self, matrix: sparse.spmatrix):
        m = sparse.csr_matrix(matrix, dtype=np.float64)
        m.eliminate_zeros()
        m.sort_indices()
        self._matrix = m

    @property
    def matrix(self) -> sparse.csr_matrix:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._matrix.shape[0]

    @property
    def nnz(self) -> int:
        return self._matrix.nnz

    def entries(self) -> dict[tuple[int, int], float]:
        coo = self._matrix.tocoo()
        return {(int(r), int(c)): float(v) for r, c, v in zip(coo.row, coo.col, coo.data)}

    def transpose(self) -> 'SparseOperator':
        return SparseOperator(self._matrix.T)

    def max_abs(self) -> float:
        return float(abs(self._matrix).max()) if self._matrix.nnz else 0.0

    def apply(self, vector: np.ndarray) -> np.ndarray:
        return self._matrix @ vector

    def __matmul__(self, other: 'SparseOperator') -> 'SparseOperator':
        return SparseOperator(self._matrix @ other._matrix)

    def __add__(self, other: 'SparseOperator') -> 'SparseOperator':
        return SparseOperator(self._matrix + other._matrix)

    def __sub__(self, other: 'SparseOperator') -> 'SparseOperator':
        return SparseOperator(self._matrix - other._matrix)

    def __mul__(self, factor: float) -> 'SparseOperator':
        return SparseOperator(self._matrix * float(factor))

    __rmul__ = __mul__

    def to_coordinate_text(self) -> str:
        '''Coordinate-list dump, one ``row col value`` line per stored entry.'''
        coo = self._matrix.tocoo()
        buf = io.StringIO()
        for r, c, v in sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())):
            buf.write(f'{r} {c} {v!r}\n')
        return buf.getvalue()


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _single_mode_lowering(dim: int) -> sparse.csr_matrix:
    # <n-1| x |n> = sqrt(n); for dim == 2 this is the fermion f (no sign: one mode)
    return sparse.diags(np.sqrt(np.arange(1, dim, dtype=np.float64)), 1,
                        shape=(dim, dim), format='csr')


def _embed(slot: int, op: sparse.spmatrix, basis: FockBasis) -> sparse.csr_matrix:
    mats = [sparse.identity(d, format='csr', dtype=np.float64) for d in basis._mode_dims()]
    mats[slot] = op
    out = mats[0]
    for m in mats[1:]:
        out = sparse.kron(out, m, format='csr')
    return out


@functools.lru_cache(maxsize=256)
def _mode_power(basis: FockBasis, slot: int, creation: int, annihilation: int) -> sparse.csr_matrix:
    dim = basis._mode_dims()[slot]
    low = _single_mode_lowering(dim)
    local = sparse.identity(dim, format='csr', dtype=np.float64)
    for _ in range(creation):
        local = local @ low.T
    for _ in range(annihilation):
        local = local @ low
    return _embed(slot, local, basis)


def ladder_matrix(name: str, basis: FockBasis) -> SparseOperator:
    '''Matrix of one ladder symbol; raising past the cutoff gives zero.'''
    try:
        slot = _SYMBOL_SLOT[name]
    except KeyError:
        raise InvalidQuantumNumbers(f'Unknown ladder symbol {name!r}') from None
    creation = name.endswith('d')
    return SparseOperator(_mode_power(basis, slot, int(creation), int(not creation)))


def _monomial_matrix(mono: Monomial, basis: FockBasis) -> sparse.csr_matrix:
    out = sparse.identity(basis.dim, format='csr', dtype=np.float64)
    for slot in range(4):
        p, q = mono.mode(slot)
        if p or q:
            out = out @ _mode_power(basis, slot, p, q)
    return out


def to_matrix(p: OperatorPoly, basis: FockBasis) -> SparseOperator:
    '''Sum of monomial matrices (written order per mode) scaled by coefficients.'''
    total = sparse.csr_matrix((basis.dim, basis.dim), dtype=np.float64)
    for mono, coeff in p.terms.items():
        total = total + float(coeff) * _monomial_matrix(mono, basis)
    return SparseOperator(total)


def interior_projector(basis: FockBasis, margin: Sequence[int]) -> SparseOperator:
    '''Diagonal projector onto states with ``N < C - margin`` in every bosonic mode.'''
    margin = tuple(int(m) for m in margin)
    if len(margin) != 3 or any(m < 0 for m in margin):
        raise InvalidQuantumNumbers(f'margin must be three non-negative integers, got {margin}')
    if any(m >= cut for m, cut in zip(margin, basis.cutoffs)):
        raise InvalidQuantumNumbers(f'margin {margin} leaves no interior inside cutoffs {basis.cutoffs}')
    diag = np.zeros(basis.dim)
    for i, (na, nb, nc, _) in enumerate(basis.states()):
        if na < basis.ca - margin[0] and nb < basis.cb - margin[1] and nc < basis.cc - margin[2]:
            diag[i] = 1.0
    return SparseOperator(sparse.diags(diag, 0, format='csr'))


def auto_margin(*polys: OperatorPoly, products: Sequence[tuple[OperatorPoly, OperatorPoly]] = ()) -> tuple[int, int, int]:
    '''Per-mode margin making truncation artifacts impossible.

    A plain polynomial needs its own maximum raising exponent; a product
    ``x y`` needs the sum of both factors' raising exponents.
    '''
    margin = [0, 0, 0]
    for p in polys:
        margin = [max(m, r) for m, r in zip(margin, p.max_raising())]
    for x, y in products:
        summed = [rx + ry for rx, ry in zip(x.max_raising(), y.max_raising())]
        margin = [max(m, r) for m, r in zip(margin, summed)]
    return tuple(margin)


def _projected_residual(diff: SparseOperator, basis: FockBasis, margin: Sequence[int]) -> float:
    proj = interior_projector(basis, margin)
    return (proj @ diff @ proj).max_abs()


def check_relation_numeric(lhs: OperatorPoly, rhs: OperatorPoly, basis: FockBasis,
                           margin: Sequence[int] | None = None) -> float:
    '''Max ``|P (M(lhs) - M(rhs)) P|`` entry; the caller compares it with a tolerance.'''
    if margin is None:
        margin = auto_margin(lhs, rhs)
    return _projected_residual(to_matrix(lhs, basis) - to_matrix(rhs, basis), basis, margin)


def numeric_supercommutator(x: OperatorPoly, y: OperatorPoly, basis: FockBasis) -> SparseOperator:
    '''Graded bracket computed from truncated matrices, independently of the engine.'''
    gx, gy = x.grade(), y.grade()
    if Grade.MIXED in (gx, gy):
        raise GradingError(f'numeric bracket needs definite grades, got [{x}, {y}}}')
    mx, my = to_matrix(x, basis), to_matrix(y, basis)
    sign = -1.0 if gx.parity and gy.parity else 1.0
    return mx @ my - (my @ mx) * sign


def check_bracket_numeric(x: OperatorPoly, y: OperatorPoly, expected: OperatorPoly,
                          basis: FockBasis, margin: Sequence[int] | None = None) -> float:
    '''Residual of ``[x, y} = expected`` with the bracket taken on matrices.'''
    if margin is None:
        margin = auto_margin(expected, products=[(x, y), (y, x)])
    diff = numeric_supercommutator(x, y, basis) - to_matrix(expected, basis)
    return _projected_residual(diff, basis, margin)
