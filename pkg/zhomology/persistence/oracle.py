"""
Independent path to persistent homology: homology of every stage, induced maps between
stages, and images / preimages in stage coordinates. Used to cross-check the quotient
formulas in groups.py.
"""
import logging

from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.constants import INFINITY
from zhomology.linalg.lattice import (Lattice, image_lattice, kernel_lattice,
                                      lattice_intersection)
from zhomology.linalg.matrix import IntMatrix, diagonal, from_columns, hstack
from zhomology.linalg.presentation import AbelianGroupPresentation, quotient_presentation
from zhomology.persistence.groups import PersistenceQuery, PersistentGroup, check_query
from zhomology.state import QueryKind

logger = logging.getLogger(__name__)


class OraclePersistence(object):
    """
    Persistent homology of one degree computed from H_n(K^j) and f^{j,k}: H_n(K^j) -> H_n(K^k).
    Subgroups of H_n(K^j) are lattices in its coordinate space Z^{s_j} containing the
    relations, so quotients by relations give the groups themselves.
    """

    def __init__(self, complex_: FilteredChainComplex, n: int) -> None:
        self.complex_ = complex_
        self.n = n

    def _stage(self, j: int) -> int:
        return min(j, self.complex_.max_filtration)

    def stage(self, j: int) -> AbelianGroupPresentation:
        j = self._stage(j)
        c = self.complex_

        def build() -> AbelianGroupPresentation:
            return quotient_presentation(c.cycles(j, self.n), c.boundary_image(0, j, self.n))
        return c.memoize(('oracle-stage', j, self.n), build)

    def relations(self, j: int) -> Lattice:
        return image_lattice(diagonal(self.stage(j).divisors))

    def lift_matrix(self, j: int) -> IntMatrix:
        return from_columns(self.stage(j).generators, self.complex_.rank(self.n))

    def induced(self, j: int, k: int) -> IntMatrix:
        """
        Matrix of f^{j,k} from stage-j coordinates to stage-k coordinates.
        """
        j, k = self._stage(j), self._stage(k)
        source, target = self.stage(j), self.stage(k)

        def build() -> IntMatrix:
            columns = [target.coordinates(g) for g in source.generators]
            return from_columns(columns, target.rank)
        return self.complex_.memoize(('oracle-map', j, k, self.n), build)

    def image(self, i: int, k: int) -> Lattice:
        """
        im f^{i,k} inside stage-k coordinates, relations included.
        """
        size = self.stage(k).rank
        if i < self.complex_.filtration_start:
            return self.relations(k)
        return image_lattice(hstack([self.induced(i, k), diagonal(self.stage(k).divisors)],
                                    size))

    def preimage(self, j: int, k: int, lattice: Lattice) -> Lattice:
        """
        (f^{j,k})^{-1}(lattice) inside stage-j coordinates.
        """
        forward = self.induced(j, k)
        rows = self.stage(k).rank
        cols = forward.shape[1]
        kernel = kernel_lattice(hstack([forward, -lattice.generators], rows))
        return Lattice(cols, kernel.generators[:cols, :])

    def total(self, i: int, j: int) -> Lattice:
        return self.image(i, j)

    def triple(self, i: int, j: int, k: int) -> Lattice:
        """
        H^{i,j}_n ∩ (f^{j,k}_n)^{-1}(H^{i-1,k}_n).
        """
        return lattice_intersection(self.image(i, j),
                                    self.preimage(j, k, self.image(i - 1, k)))

    def quotient(self, numerator: Lattice, denominator: Lattice,
                 j: int) -> AbelianGroupPresentation:
        presentation = quotient_presentation(numerator, denominator)
        return presentation.lifted(self.lift_matrix(j))


def oracle_persistence(complex_: FilteredChainComplex, query: PersistenceQuery) -> PersistentGroup:
    """
    Compute a persistence query without the quotient formulas.
    The stored numerator and denominator are lattices in stage-homology coordinates.
    """
    check_query(complex_, query)
    oracle = OraclePersistence(complex_, query.n)
    i = query.i
    m = complex_.max_filtration
    if query.kind == QueryKind.TOTAL:
        j = query.j
        numerator, denominator, stage = oracle.total(i, j), oracle.relations(j), j
    elif query.kind == QueryKind.TRIPLE:
        j, k = query.j, query.k
        if k == INFINITY:
            numerator = oracle.total(i, j)
        else:
            numerator = oracle.triple(i, j, int(k))
        denominator, stage = oracle.relations(j), j
    elif query.k == INFINITY:
        numerator, denominator, stage = oracle.image(i, m), oracle.image(i - 1, m), m
    else:
        k = int(query.k)
        numerator = oracle.triple(i, k - 1, k)
        denominator, stage = oracle.image(i - 1, k - 1), k - 1
    presentation = oracle.quotient(numerator, denominator, stage)
    logger.debug('Oracle %s has divisors %s', query.describe(), presentation.divisors)
    return PersistentGroup(query, presentation, numerator, denominator, complex_)
