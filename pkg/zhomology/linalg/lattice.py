"""
Subgroups of Z^m kept in column Hermite normal form.
"""
import logging
from typing import List, Optional, Sequence

from zhomology import LatticeMismatchError, ShapeMismatchError
from zhomology.linalg.matrix import (IntMatrix, from_columns, hermite, hstack, identity,
                                     matmul, pivot_rows, smith, zeros)

logger = logging.getLogger(__name__)


class Lattice(object):
    """
    Subgroup of the free module Z^ambient_rank.
    The generator matrix is always the column Hermite normal form, so two lattices
    are equal exactly when their representations are.
    Usage:
        evens = Lattice(1, int_matrix([[2]]))
        assert [4] in evens
    """

    __slots__ = ('ambient_rank', 'generators', '_pivots')

    def __init__(self, ambient_rank: int, generators: Optional[IntMatrix] = None,
                 normalized: bool = False) -> None:
        if generators is None:
            generators = zeros(ambient_rank, 0)
        if generators.shape[0] != ambient_rank:
            raise ShapeMismatchError(
                f'Generator matrix has {generators.shape[0]} rows for ambient rank {ambient_rank}')
        if not normalized:
            generators = hermite(generators)
        generators.setflags(write=False)
        self.ambient_rank = ambient_rank
        self.generators = generators
        self._pivots = pivot_rows(generators)

    @classmethod
    def zero(cls, ambient_rank: int) -> 'Lattice':
        return cls(ambient_rank, zeros(ambient_rank, 0), normalized=True)

    @classmethod
    def full(cls, ambient_rank: int) -> 'Lattice':
        return cls(ambient_rank, identity(ambient_rank), normalized=True)

    @property
    def rank(self) -> int:
        return self.generators.shape[1]

    def columns(self) -> List[List[int]]:
        return [list(self.generators[:, j]) for j in range(self.rank)]

    def coefficients(self, vector: Sequence[int]) -> Optional[List[int]]:
        """
        Solve generators · c = vector by back-substitution along the pivot rows.
        :return: the unique coefficient list, or None when vector is not in the lattice
        """
        if len(vector) != self.ambient_rank:
            raise LatticeMismatchError(
                f'Chain has {len(vector)} coordinates, lattice lives in rank {self.ambient_rank}')
        residual = [int(x) for x in vector]
        coeffs = []
        for k, row in enumerate(self._pivots):
            if any(residual[:row]):
                return None
            column = self.generators[:, k]
            factor, remainder = divmod(residual[row], column[row])
            if remainder:
                return None
            if factor:
                residual = [r - factor * g for r, g in zip(residual, column)]
            coeffs.append(factor)
        if any(residual):
            return None
        return coeffs

    def __contains__(self, vector: Sequence[int]) -> bool:
        return self.coefficients(vector) is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (self.ambient_rank == other.ambient_rank
                and self.generators.shape == other.generators.shape
                and all(a == b for a, b in zip(self.generators.flat, other.generators.flat)))

    def __hash__(self) -> int:
        return hash((self.ambient_rank, self.rank, tuple(self.generators.flat)))

    def __repr__(self) -> str:
        return f'Lattice(ambient_rank={self.ambient_rank}, rank={self.rank})'


def _check_ambient(left: Lattice, right: Lattice) -> None:
    if left.ambient_rank != right.ambient_rank:
        raise LatticeMismatchError(
            f'Lattices live in ranks {left.ambient_rank} and {right.ambient_rank}')


def kernel_lattice(mat: IntMatrix) -> Lattice:
    """
    {x : mat·x = 0} as a saturated lattice in Z^cols, read off the trailing columns of V.
    """
    decomposition = smith(mat)
    cols = mat.shape[1]
    return Lattice(cols, decomposition.V[:, decomposition.rank:])


def image_lattice(mat: IntMatrix) -> Lattice:
    return Lattice(mat.shape[0], mat)


def lattice_sum(left: Lattice, right: Lattice) -> Lattice:
    _check_ambient(left, right)
    if right.rank == 0:
        return left
    if left.rank == 0:
        return right
    return Lattice(left.ambient_rank,
                   hstack([left.generators, right.generators], left.ambient_rank))


def lattice_intersection(left: Lattice, right: Lattice) -> Lattice:
    """
    Solve left·x = right·y through the kernel of [left | -right]; the x-part spans the answer.
    """
    _check_ambient(left, right)
    if left.rank == 0 or right.rank == 0:
        return Lattice.zero(left.ambient_rank)
    stacked = hstack([left.generators, -right.generators], left.ambient_rank)
    kernel = kernel_lattice(stacked)
    left_part = kernel.generators[:left.rank, :]
    return Lattice(left.ambient_rank, matmul(left.generators, left_part))


def lattice_contains(lattice: Lattice, vector: Sequence[int]) -> bool:
    return vector in lattice


def embed(lattice: Lattice, positions: Sequence[int], ambient_rank: int) -> Lattice:
    """
    Place a lattice of Z^len(positions) into Z^ambient_rank along increasing coordinate positions.
    Inserting zero rows keeps the Hermite normal form intact.
    """
    if lattice.ambient_rank != len(positions):
        raise LatticeMismatchError(
            f'Cannot embed rank {lattice.ambient_rank} along {len(positions)} positions')
    columns = []
    for column in lattice.columns():
        full = [0] * ambient_rank
        for pos, value in zip(positions, column):
            full[pos] = value
        columns.append(full)
    return Lattice(ambient_rank, from_columns(columns, ambient_rank), normalized=True)


def coordinate_lattice(positions: Sequence[int], ambient_rank: int) -> Lattice:
    """
    Lattice spanned by the standard basis vectors at the given increasing positions.
    """
    return embed(Lattice.full(len(positions)), positions, ambient_rank)
