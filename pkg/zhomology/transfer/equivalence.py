"""
Strong equivalences C <= D => EC, transfer of spectral sequence and persistence results
across them, and construction of test equivalences by adjoining acyclic pairs.
"""
import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from zhomology import (InvariantViolation, NotACycleError, ShapeMismatchError,
                       UnverifiedEquivalenceError)
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.constants import INFINITY
from zhomology.linalg.matrix import apply, identity, zeros
from zhomology.persistence.groups import PersistenceQuery, PersistentGroup, compute
from zhomology.spectral.pages import limit_level, spsq_group
from zhomology.state import QueryKind, TransferStatus
from zhomology.transfer.reduction import (Reduction, ReductionReport, homotopy_order,
                                          reduction_filtered, verify_reduction)

logger = logging.getLogger(__name__)


class Equivalence(object):
    """
    Two reductions sharing the top complex D: left onto C, right onto EC.
    """

    def __init__(self, left: Reduction, right: Reduction) -> None:
        if left.top is not right.top:
            raise ShapeMismatchError('Both reductions of an equivalence need the same top complex')
        self.left = left
        self.right = right

    @classmethod
    def trivial(cls, complex_: FilteredChainComplex) -> 'Equivalence':
        reduction = Reduction.identity(complex_)
        return cls(reduction, reduction)

    @property
    def top(self) -> FilteredChainComplex:
        return self.left.top

    @property
    def left_bottom(self) -> FilteredChainComplex:
        return self.left.bottom

    @property
    def right_bottom(self) -> FilteredChainComplex:
        return self.right.bottom


class SpectralQuery(NamedTuple):
    """
    A single page group E^r_{p,q}, or the whole page r when p and q are omitted.
    """
    r: int
    p: Optional[int] = None
    q: Optional[int] = None


Query = Union[SpectralQuery, PersistenceQuery]


class TransferReport(NamedTuple):
    query: Query
    left_divisors: List[Tuple[Tuple[int, int], List[int]]]
    right_divisors: List[Tuple[Tuple[int, int], List[int]]]
    match: bool
    order: int
    filtered: bool
    hypothesis: bool
    status: TransferStatus


def verify_equivalence(equivalence: Equivalence) -> Tuple[ReductionReport, ReductionReport]:
    return verify_reduction(equivalence.left), verify_reduction(equivalence.right)


def _require_verified(equivalence: Equivalence) -> None:
    left, right = verify_equivalence(equivalence)
    if not left.ok or not right.ok:
        failed = (left.violations + right.violations)[0]
        raise UnverifiedEquivalenceError(
            f'Equivalence fails {failed.identity} in degree {failed.degree} on {failed.generator}')


def equivalence_order(equivalence: Equivalence) -> int:
    return max(homotopy_order(equivalence.left).s, homotopy_order(equivalence.right).s)


def equivalence_filtered(equivalence: Equivalence) -> bool:
    """
    All four maps f1, g1, f2, g2 respect the filtrations.
    """
    return reduction_filtered(equivalence.left) and reduction_filtered(equivalence.right)


def _page_box(equivalence: Equivalence) -> List[Tuple[int, int]]:
    complexes = (equivalence.left_bottom, equivalence.right_bottom)
    stages = range(min(c.filtration_start for c in complexes),
                   max(c.max_filtration for c in complexes) + 1)
    degrees = range(min(min(c.degrees) for c in complexes),
                    max(max(c.degrees) for c in complexes) + 1)
    return [(p, n - p) for n in degrees for p in stages]


def _spectral_divisors(complex_: FilteredChainComplex, query: SpectralQuery,
                       box: List[Tuple[int, int]]) -> List[Tuple[Tuple[int, int], List[int]]]:
    cells = box if query.p is None else [(query.p, query.q)]
    return [((p, q), spsq_group(complex_, query.r, p, q).presentation.divisors)
            for p, q in cells]


def _hypothesis(query: Query, order: int) -> bool:
    if isinstance(query, SpectralQuery):
        return query.r > order
    if query.kind == QueryKind.BD:
        return query.k == INFINITY or query.k - query.i > order
    if query.kind == QueryKind.TOTAL:
        return query.j - query.i >= order
    return query.j - query.i >= order and (query.k == INFINITY or query.k - query.i > order)


def transfer_check(equivalence: Equivalence, query: Query) -> TransferReport:
    """
    Compute a group on both C and EC and compare divisors. Hypotheses are evaluated on
    every call: all maps filtered and the homotopy order s below the query's range.
    :raises UnverifiedEquivalenceError: a reduction fails its identities
    """
    _require_verified(equivalence)
    order = equivalence_order(equivalence)
    filtered = equivalence_filtered(equivalence)
    hypothesis = filtered and _hypothesis(query, order)

    if isinstance(query, SpectralQuery):
        box = _page_box(equivalence)
        left = _spectral_divisors(equivalence.left_bottom, query, box)
        right = _spectral_divisors(equivalence.right_bottom, query, box)
    else:
        left = [((query.i, query.n), compute(equivalence.left_bottom, query).divisors)]
        right = [((query.i, query.n), compute(equivalence.right_bottom, query).divisors)]
    match = left == right

    if match:
        status = TransferStatus.MATCH
    elif not hypothesis:
        status = TransferStatus.MISMATCH_OUTSIDE_RANGE
    else:
        status = TransferStatus.VIOLATION
        logger.warning('Transfer of %s fails inside the theorem range', query)
    return TransferReport(query, left, right, match, order, filtered, hypothesis, status)


def transfer_levels(equivalence: Equivalence) -> List[TransferReport]:
    """
    Whole-page comparison for every level up to the final one of either side.
    """
    last = max(limit_level(equivalence.left_bottom), limit_level(equivalence.right_bottom))
    return [transfer_check(equivalence, SpectralQuery(r)) for r in range(1, last + 1)]


def transfer_generators(equivalence: Equivalence, group: PersistentGroup) -> List[List[int]]:
    """
    Carry the generators of a group computed on EC over to C through f1 g2.
    :raises NotACycleError: a generator is not a cycle on EC
    """
    _require_verified(equivalence)
    right_bottom = equivalence.right_bottom
    n = group.query.n
    result = []
    for generator in group.presentation.generators:
        if not right_bottom.is_cycle(n, generator):
            raise NotACycleError(f'Generator {generator} of degree {n} is not a cycle')
        chain = apply(equivalence.left.f_at(n), apply(equivalence.right.g_at(n), generator))
        if not equivalence.left_bottom.is_cycle(n, chain):
            raise InvariantViolation('Transferred generator is not a cycle')
        result.append(chain)
    return result


class AcyclicPair(NamedTuple):
    """
    Generators x (degree n, stage x_stage) and y (degree n+1, stage y_stage) with
    d(y) = x + beta and d(x) = -d(beta), beta a degree-n chain of the base.
    """
    n: int
    x_stage: int
    y_stage: int
    beta: Optional[Sequence[int]] = None
    x_name: Optional[str] = None
    y_name: Optional[str] = None


def acyclic_extension(base: FilteredChainComplex,
                      pairs: Sequence[AcyclicPair]) -> Tuple[FilteredChainComplex, Reduction]:
    """
    Adjoin acyclic pairs to a base complex, new generators after the base ones.
    :return: the extended complex D and the reduction D => base with f(x) = -beta,
        f(y) = 0, g the inclusion and h(x) = y
    """
    basis: Dict[int, List[str]] = {n: base.basis(n) for n in base.degrees}
    stages: Dict[int, List[int]] = {n: base.stages(n) for n in base.degrees}
    placed = []
    for idx, pair in enumerate(pairs):
        x_name = pair.x_name or f'x{idx}'
        y_name = pair.y_name or f'y{idx}'
        x_pos = len(basis.setdefault(pair.n, []))
        basis[pair.n].append(x_name)
        stages.setdefault(pair.n, []).append(pair.x_stage)
        y_pos = len(basis.setdefault(pair.n + 1, []))
        basis[pair.n + 1].append(y_name)
        stages.setdefault(pair.n + 1, []).append(pair.y_stage)
        beta = list(pair.beta) if pair.beta is not None else [0] * base.rank(pair.n)
        if len(beta) != base.rank(pair.n):
            raise ShapeMismatchError(f'beta of pair {idx} has {len(beta)} coordinates, '
                                     f'degree {pair.n} of the base has {base.rank(pair.n)}')
        placed.append((pair, x_pos, y_pos, beta))

    differentials = {}
    for n in basis:
        mat = zeros(len(basis.get(n - 1, [])), len(basis[n]))
        old = base.differential(n)
        mat[:old.shape[0], :old.shape[1]] = old
        differentials[n] = mat
    for pair, x_pos, y_pos, beta in placed:
        d_y = differentials[pair.n + 1]
        d_y[x_pos, y_pos] = 1
        for row, value in enumerate(beta):
            d_y[row, y_pos] += value
        d_beta = base.boundary(pair.n, beta)
        d_x = differentials[pair.n]
        for row, value in enumerate(d_beta):
            d_x[row, x_pos] = -value

    top = FilteredChainComplex(basis, differentials, stages,
                               filtration_start=base.filtration_start)

    f, g, h = {}, {}, {}
    for n in top.degrees:
        f[n] = zeros(base.rank(n), top.rank(n))
        f[n][:, :base.rank(n)] = identity(base.rank(n))
        g[n] = zeros(top.rank(n), base.rank(n))
        g[n][:base.rank(n), :] = identity(base.rank(n))
        h[n] = zeros(top.rank(n + 1), top.rank(n))
    for pair, x_pos, y_pos, beta in placed:
        for row, value in enumerate(beta):
            f[pair.n][row, x_pos] = -value
        h[pair.n][y_pos, x_pos] = 1
    logger.debug('Adjoined %s acyclic pairs to %s', len(placed), base)
    return top, Reduction(top, base, f, g, h)
