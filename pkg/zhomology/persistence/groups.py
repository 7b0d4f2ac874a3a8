"""
Integer persistent homology groups computed from the filtration quotient formulas.

Every group is kept as numerator / denominator where the numerator consists of cycles,
so the presentation generators are always homology representatives.
"""
import logging
from typing import List, NamedTuple, Optional, Tuple, Union

from zhomology import InvariantViolation, StageOrderError
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.constants import INFINITY
from zhomology.linalg.lattice import Lattice, lattice_intersection, lattice_sum
from zhomology.linalg.presentation import AbelianGroupPresentation, quotient_presentation
from zhomology.state import QueryKind

logger = logging.getLogger(__name__)

Stage = Union[int, float]


class PersistenceQuery(NamedTuple):
    """
    Which group to compute. k may be INFINITY for BD and triple queries.
    """
    kind: QueryKind
    n: int
    i: int
    j: Optional[int] = None
    k: Optional[Stage] = None

    @classmethod
    def bd(cls, i: int, k: Stage, n: int) -> 'PersistenceQuery':
        return cls(QueryKind.BD, n, i, None, k)

    @classmethod
    def total(cls, i: int, j: int, n: int) -> 'PersistenceQuery':
        return cls(QueryKind.TOTAL, n, i, j, None)

    @classmethod
    def triple(cls, i: int, j: int, k: Stage, n: int) -> 'PersistenceQuery':
        return cls(QueryKind.TRIPLE, n, i, j, k)

    def describe(self) -> str:
        k = 'inf' if self.k == INFINITY else self.k
        if self.kind == QueryKind.BD:
            return f'BD^{{{self.i},{k}}}_{self.n}'
        if self.kind == QueryKind.TOTAL:
            return f'H^{{{self.i},{self.j}}}_{self.n}'
        return f'H^{{{self.i},{self.j},{k}}}_{self.n}'


class PersistentGroup(NamedTuple):
    """
    A computed group: presentation of numerator / denominator, both lattices of
    degree-n chains of the complex.
    """
    query: PersistenceQuery
    presentation: AbelianGroupPresentation
    numerator: Lattice
    denominator: Lattice
    complex_: FilteredChainComplex

    @property
    def divisors(self) -> List[int]:
        return self.presentation.divisors


def check_query(complex_: FilteredChainComplex, query: PersistenceQuery) -> None:
    """
    Validate the stage ordering of a query. Stages above the last one behave as the
    last stage, i = filtration_start - 1 gives the zero group.
    :raises StageOrderError: on any ordering violation
    """
    start = complex_.filtration_start
    i, j, k = query.i, query.j, query.k
    if i < start - 1:
        raise StageOrderError(f'Stage i={i} lies below {start - 1}')
    if query.kind == QueryKind.BD:
        if k is None or not i < k:
            raise StageOrderError(f'BD needs i < k, got i={i}, k={k}')
    elif query.kind == QueryKind.TOTAL:
        if j is None or not i <= j:
            raise StageOrderError(f'H^{{i,j}} needs i <= j, got i={i}, j={j}')
    else:
        if j is None or k is None or not i <= j <= k:
            raise StageOrderError(f'H^{{i,j,k}} needs i <= j <= k, got i={i}, j={j}, k={k}')


def _group(complex_: FilteredChainComplex, query: PersistenceQuery,
           numerator: Lattice, denominator: Lattice) -> PersistentGroup:
    presentation = quotient_presentation(numerator, denominator)
    logger.debug('%s has divisors %s', query.describe(), presentation.divisors)
    return PersistentGroup(query, presentation, numerator, denominator, complex_)


def total_prst_group(complex_: FilteredChainComplex, i: int, j: int, n: int) -> PersistentGroup:
    """
    H^{i,j}_n = (ker d_n ∩ C^i_n) / d_{n+1}(Z^{j-i}_{j,n-j+1}).
    """
    query = PersistenceQuery.total(i, j, n)
    check_query(complex_, query)

    def build() -> PersistentGroup:
        return _group(complex_, query, complex_.cycles(i, n),
                      complex_.boundary_image(j - i, j, n))
    return complex_.memoize(('group', query), build)


def triple_prst_group(complex_: FilteredChainComplex, i: int, j: int, k: Stage,
                      n: int) -> PersistentGroup:
    """
    H^{i,j,k}_n = (ker d_n ∩ C^{i-1}_n + d_{n+1}(Z^{k-i}_{k,n-k+1})) / d_{n+1}(Z^{j-i}_{j,n-j+1}).
    k = INFINITY gives H^{i,j}_n itself.
    """
    query = PersistenceQuery.triple(i, j, k, n)
    check_query(complex_, query)
    if k == INFINITY:
        total = total_prst_group(complex_, i, j, n)
        return total._replace(query=query)

    def build() -> PersistentGroup:
        k_stage = int(k)
        numerator = lattice_sum(complex_.cycles(i - 1, n),
                                complex_.boundary_image(k_stage - i, k_stage, n))
        return _group(complex_, query, numerator, complex_.boundary_image(j - i, j, n))
    return complex_.memoize(('group', query), build)


def bd_group(complex_: FilteredChainComplex, i: int, k: Stage, n: int) -> PersistentGroup:
    """
    BD^{i,k}_n = A / (A ∩ (d_{n+1}(Z^{k-i-1}_{k-1,n-k+2}) + C^{i-1}_n)) with
    A = d_{n+1}(Z^{k-i}_{k,n-k+1}).
    BD^{i,inf}_n = H^{i,m}_n / H^{i-1,m}_n, computed as
    (ker d_n ∩ C^i) / ((ker d_n ∩ C^{i-1}) + (im d_{n+1} ∩ C^i)).
    """
    query = PersistenceQuery.bd(i, k, n)
    check_query(complex_, query)

    def build() -> PersistentGroup:
        if k == INFINITY:
            denominator = lattice_sum(complex_.cycles(i - 1, n), complex_.boundaries(i, n))
            return _group(complex_, query, complex_.cycles(i, n), denominator)
        k_stage = int(k)
        born = complex_.boundary_image(k_stage - i, k_stage, n)
        older = lattice_sum(complex_.boundary_image(k_stage - i - 1, k_stage - 1, n),
                            complex_.filtration_submodule(i - 1, n))
        return _group(complex_, query, born, lattice_intersection(born, older))
    return complex_.memoize(('group', query), build)


def stage_homology(complex_: FilteredChainComplex, j: int, n: int) -> PersistentGroup:
    """
    H_n(K^j) with generators.
    """
    return total_prst_group(complex_, j, j, n)


def homology(complex_: FilteredChainComplex, n: int) -> PersistentGroup:
    return stage_homology(complex_, complex_.max_filtration, n)


def compute(complex_: FilteredChainComplex, query: PersistenceQuery,
            oracle: bool = False) -> PersistentGroup:
    """
    Dispatch a query to the quotient formulas, or to the independent oracle path.
    """
    if oracle:
        from zhomology.persistence.oracle import oracle_persistence
        return oracle_persistence(complex_, query)
    if query.kind == QueryKind.BD:
        return bd_group(complex_, query.i, query.k, query.n)
    if query.kind == QueryKind.TOTAL:
        return total_prst_group(complex_, query.i, query.j, query.n)
    return triple_prst_group(complex_, query.i, query.j, query.k, query.n)


def persistent_generators(group: PersistentGroup) -> List[Tuple[int, List[int]]]:
    """
    One cycle per cyclic summand, each checked to be a cycle inside C^i and, for finite
    BD groups, a boundary once stage k is reached.
    :return: list of (divisor, chain)
    :raises InvariantViolation: a generator fails one of the checks
    """
    complex_ = group.complex_
    query = group.query
    result = []
    for divisor, chain in zip(group.presentation.divisors, group.presentation.generators):
        if not complex_.is_cycle(query.n, chain):
            raise InvariantViolation(f'Generator of {query.describe()} is not a cycle')
        if chain not in complex_.filtration_submodule(query.i, query.n):
            raise InvariantViolation(f'Generator of {query.describe()} lies outside C^{query.i}')
        if query.kind == QueryKind.BD and query.k != INFINITY:
            dead = complex_.boundary_image(0, int(query.k), query.n)
            if chain not in dead:
                raise InvariantViolation(
                    f'Generator of {query.describe()} is still alive at stage {query.k}')
        result.append((divisor, chain))
    return result
