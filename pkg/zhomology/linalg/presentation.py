"""
Basis-divisors descriptions of finitely generated abelian groups given as lattice quotients.
"""
import logging
from typing import List, Optional, Sequence

from zhomology import ContainmentError
from zhomology.linalg.lattice import Lattice
from zhomology.linalg.matrix import (IntMatrix, apply, diagonal, from_columns, matmul,
                                     smith)

logger = logging.getLogger(__name__)


class AbelianGroupPresentation(object):
    """
    Direct sum of cyclic groups Z/d, one per divisor (d = 0 is a free summand),
    each generated by the matching chain of the ambient free module.
    Divisors are normalized: no 1s, every divisor divides the next, zeros trailing.
    """

    __slots__ = ('divisors', 'generators', 'basis', 'transform')

    def __init__(self, divisors: Sequence[int], generators: Sequence[Sequence[int]],
                 basis: Optional[Lattice] = None,
                 transform: Optional[IntMatrix] = None) -> None:
        if len(divisors) != len(generators):
            raise ValueError('Every divisor needs exactly one generator')
        self.divisors = [int(d) for d in divisors]
        self.generators = [[int(x) for x in g] for g in generators]
        # numerator lattice and the rows of U selecting the kept cyclic summands
        self.basis = basis
        self.transform = transform

    @classmethod
    def empty(cls) -> 'AbelianGroupPresentation':
        return cls([], [])

    @property
    def free_rank(self) -> int:
        return sum(1 for d in self.divisors if d == 0)

    @property
    def torsion(self) -> List[int]:
        return [d for d in self.divisors if d != 0]

    @property
    def rank(self) -> int:
        return len(self.divisors)

    def is_trivial(self) -> bool:
        return not self.divisors

    def coordinates(self, vector: Sequence[int]) -> List[int]:
        """
        Coordinates of a numerator element in the cyclic basis, reduced modulo each
        nonzero divisor.
        :raises ContainmentError: vector does not lie in the numerator
        """
        if self.basis is None or self.transform is None:
            raise ContainmentError('Presentation was lifted and no longer knows its numerator')
        coeffs = self.basis.coefficients(vector)
        if coeffs is None:
            raise ContainmentError('Chain is not an element of the presented group')
        raw = apply(self.transform, coeffs) if self.transform.shape[0] else []
        return [value % d if d else value for value, d in zip(raw, self.divisors)]

    def lifted(self, through: IntMatrix) -> 'AbelianGroupPresentation':
        """
        Same divisors with every generator pushed through a matrix, for presentations
        computed in coordinate space.
        """
        return AbelianGroupPresentation(self.divisors,
                                        [apply(through, g) for g in self.generators])

    def __eq__(self, other) -> bool:
        if not isinstance(other, AbelianGroupPresentation):
            return NotImplemented
        return self.divisors == other.divisors and self.generators == other.generators

    def __repr__(self) -> str:
        return f'AbelianGroupPresentation(divisors={self.divisors})'


def quotient_presentation(numerator: Lattice, denominator: Lattice) -> AbelianGroupPresentation:
    """
    Present numerator / denominator.
    The denominator generators are written in the numerator basis B, giving a relation
    matrix R with U·R·V = D. The columns of B·U^-1 form the new basis, and the
    denominator is spanned by D[i, i] times its i-th column.
    :raises ContainmentError: a denominator generator is not in the numerator
    """
    relations = []
    for column in denominator.columns():
        coeffs = numerator.coefficients(column)
        if coeffs is None:
            raise ContainmentError('Denominator is not contained in the numerator')
        relations.append(coeffs)
    s = numerator.rank
    relation_matrix = from_columns(relations, s)
    decomposition = smith(relation_matrix)
    diagonal_entries = decomposition.divisors
    new_basis = matmul(numerator.generators, decomposition.U_inv)

    kept = []
    divisors = []
    for i in range(s):
        d = diagonal_entries[i] if i < len(diagonal_entries) else 0
        if d == 1:
            continue
        kept.append(i)
        divisors.append(d)
    generators = [list(new_basis[:, i]) for i in kept]
    transform = decomposition.U[kept, :] if kept else decomposition.U[:0, :]
    logger.debug('Quotient of rank %s by rank %s has divisors %s',
                 numerator.rank, denominator.rank, divisors)
    return AbelianGroupPresentation(divisors, generators, basis=numerator, transform=transform)


def normalize_divisors(divisors: Sequence[int]) -> List[int]:
    """
    Canonical divisor list of a direct sum of cyclic groups Z/d.
    """
    if not divisors:
        return []
    values = smith(diagonal([abs(int(d)) for d in divisors])).divisors
    return [d for d in values if d != 1]
