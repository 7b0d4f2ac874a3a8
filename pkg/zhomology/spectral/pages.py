"""
Pages, differentials and image groups of the spectral sequence of a filtered complex.

E^r_{p,q} = (Z^r_{p,q} + C^{p-1}) / (d Z^{r-1}_{p+r-1,q-r+2} + C^{p-1}) is stored as
Z^r_{p,q} / (Z^r_{p,q} ∩ (d Z^{r-1}_{p+r-1,q-r+2} + C^{p-1})), so every presentation
generator lies in Z^r and its boundary lands in the target page.
"""
import logging
from typing import List, NamedTuple, Optional, Union

from zhomology import ContainmentError, DomainError, InvariantViolation
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.constants import INFINITY
from zhomology.linalg.lattice import (Lattice, image_lattice, kernel_lattice,
                                      lattice_intersection, lattice_sum)
from zhomology.linalg.matrix import IntMatrix, diagonal, from_columns, hstack, is_zero
from zhomology.linalg.presentation import AbelianGroupPresentation, quotient_presentation
from zhomology.persistence.groups import bd_group

logger = logging.getLogger(__name__)

Level = Union[int, float]


class PageGroupId(NamedTuple):
    r: int
    p: int
    q: int


class PageGroup(NamedTuple):
    """
    E^r_{p,q} with numerator Z^r_{p,q} and the reduced denominator.
    """
    id: PageGroupId
    presentation: AbelianGroupPresentation
    numerator: Lattice
    denominator: Lattice

    @property
    def degree(self) -> int:
        return self.id.p + self.id.q


class PageDifferential(NamedTuple):
    """
    d^r_{p,q} as a matrix from source presentation coordinates to target coordinates.
    """
    source: PageGroup
    target: PageGroup
    matrix: IntMatrix

    def is_zero(self) -> bool:
        return is_zero(self.matrix)


class InequalityReport(NamedTuple):
    lhs: int
    rhs: int
    strict: bool

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def limit_level(complex_: FilteredChainComplex) -> int:
    """
    A level from which every page is stable: m - filtration_start + 2.
    """
    return complex_.max_filtration - complex_.filtration_start + 2


def _level(complex_: FilteredChainComplex, r: Level) -> int:
    if r == INFINITY:
        return limit_level(complex_)
    if r < 1:
        raise DomainError(f'Spectral sequence levels start at 1, got {r}')
    return int(r)


def spsq_group(complex_: FilteredChainComplex, r: Level, p: int, q: int) -> PageGroup:
    """
    E^r_{p,q}; r = INFINITY evaluates at limit_level.
    """
    level = _level(complex_, r)
    group_id = PageGroupId(level, p, q)

    def build() -> PageGroup:
        n = p + q
        numerator = complex_.almost_cycles(level, p, n)
        older = lattice_sum(complex_.boundary_image(level - 1, p + level - 1, n),
                            complex_.filtration_submodule(p - 1, n))
        denominator = lattice_intersection(numerator, older)
        presentation = quotient_presentation(numerator, denominator)
        logger.debug('E^%s_{%s,%s} has divisors %s', level, p, q, presentation.divisors)
        return PageGroup(group_id, presentation, numerator, denominator)
    return complex_.memoize(('spsq-group', group_id), build)


def spsq_differential(complex_: FilteredChainComplex, r: Level, p: int,
                      q: int) -> PageDifferential:
    """
    d^r_{p,q}: E^r_{p,q} -> E^r_{p-r,q+r-1}, one column per source generator.
    :raises InvariantViolation: a boundary misses the target page
    """
    level = _level(complex_, r)
    source = spsq_group(complex_, level, p, q)
    target = spsq_group(complex_, level, p - level, q + level - 1)
    n = p + q
    columns = []
    for generator in source.presentation.generators:
        boundary = complex_.boundary(n, generator)
        try:
            columns.append(target.presentation.coordinates(boundary))
        except ContainmentError:
            raise InvariantViolation(
                f'Boundary of a generator of E^{level}_{{{p},{q}}} is not in '
                f'E^{level}_{{{p - level},{q + level - 1}}}')
    matrix = from_columns(columns, target.presentation.rank)
    return PageDifferential(source, target, matrix)


def _relations(presentation: AbelianGroupPresentation) -> IntMatrix:
    return diagonal(presentation.divisors)


def image_group(complex_: FilteredChainComplex, r: Level, p: int,
                q: int) -> AbelianGroupPresentation:
    """
    A^r_{p,q}: image of d^r_{p+r,q-r+1} inside E^r_{p,q}, computed in the coordinates of
    E^r_{p,q} and lifted back to chains.
    """
    level = _level(complex_, r)
    incoming = spsq_differential(complex_, level, p + level, q - level + 1)
    target = incoming.target.presentation
    size = target.rank
    relations = _relations(target)
    image = image_lattice(hstack([incoming.matrix, relations], size))
    presentation = quotient_presentation(image, image_lattice(relations))
    lift = from_columns(target.generators, complex_.rank(p + q))
    return presentation.lifted(lift)


def page_homology(complex_: FilteredChainComplex, r: Level, p: int,
                  q: int) -> AbelianGroupPresentation:
    """
    ker d^r_{p,q} / im d^r_{p+r,q-r+1}, computed in the coordinates of E^r_{p,q}.
    """
    level = _level(complex_, r)
    outgoing = spsq_differential(complex_, level, p, q)
    incoming = spsq_differential(complex_, level, p + level, q - level + 1)
    here = outgoing.source.presentation
    size = here.rank
    target_relations = _relations(outgoing.target.presentation)
    stacked = hstack([outgoing.matrix, -target_relations], outgoing.target.presentation.rank)
    solutions = kernel_lattice(stacked)
    kernel = Lattice(size, solutions.generators[:size, :])
    relations = image_lattice(_relations(here))
    numerator = lattice_sum(kernel, relations)
    denominator = lattice_sum(image_lattice(incoming.matrix), relations)
    presentation = quotient_presentation(numerator, denominator)
    lift = from_columns(here.generators, complex_.rank(p + q))
    return presentation.lifted(lift)


def _touches(complex_: FilteredChainComplex, level: int, n: int) -> bool:
    for p in complex_.stage_range:
        if not spsq_differential(complex_, level, p, n - p).is_zero():
            return True
        if not spsq_differential(complex_, level, p + level, n - p - level + 1).is_zero():
            return True
    return False


def convergence_level(complex_: FilteredChainComplex, n: int) -> int:
    """
    Smallest r such that no differential of level >= r starts or ends in total degree n.
    """
    last = 0
    for level in range(1, limit_level(complex_) + 1):
        if _touches(complex_, level, n):
            last = level
    logger.debug('Degree %s converges at level %s', n, last + 1)
    return last + 1


def check_inequality(complex_: FilteredChainComplex, r: int, n: int) -> InequalityReport:
    """
    Compare sum_p rank E^r_{p,n-p} with the number of degree-n bars of length >= r,
    counting infinite bars. Ranks are free ranks.
    """
    level = _level(complex_, r)
    start, m = complex_.filtration_start, complex_.max_filtration
    lhs = sum(spsq_group(complex_, level, p, n - p).presentation.free_rank
              for p in range(start, m + 1))
    rhs = 0
    for i in range(start, m + 1):
        for k in range(i + level, m + 1):
            rhs += bd_group(complex_, i, k, n).presentation.free_rank
        rhs += bd_group(complex_, i, INFINITY, n).presentation.free_rank
    logger.info('Inequality at r=%s, n=%s: lhs=%s rhs=%s', level, n, lhs, rhs)
    return InequalityReport(lhs, rhs, lhs > rhs)


def page(complex_: FilteredChainComplex, r: Level, n: int,
         stages: Optional[range] = None) -> List[PageGroup]:
    """
    All groups E^r_{p,n-p} over the stage range.
    """
    return [spsq_group(complex_, r, p, n - p) for p in (stages or complex_.stage_range)]
