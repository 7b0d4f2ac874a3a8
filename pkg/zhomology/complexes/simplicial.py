"""
Filtered simplicial complexes and their simplicial chain complexes.
"""
import logging
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from zhomology import InvalidComplexError
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.constants import DEFAULT_FILTRATION_START_SIMPLICIAL
from zhomology.linalg.matrix import zeros

logger = logging.getLogger(__name__)

Simplex = Tuple[int, ...]


def simplex_name(simplex: Simplex) -> str:
    return '<' + ','.join(str(v) for v in simplex) + '>'


def faces(simplex: Simplex) -> List[Simplex]:
    """
    Codimension-one faces, the i-th face omitting the i-th vertex.
    """
    if len(simplex) < 2:
        return []
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


class FilteredSimplicialComplex(object):
    """
    Simplices (strictly increasing vertex tuples) mapped to the stage they enter at.
    Closed under faces, and no face enters after one of its cofaces.
    """

    def __init__(self, simplices: Mapping[Sequence[int], int],
                 filtration_start: int = DEFAULT_FILTRATION_START_SIMPLICIAL) -> None:
        self.filtration_start = filtration_start
        self.simplices: Dict[Simplex, int] = {}
        for simplex, stage in simplices.items():
            key = tuple(int(v) for v in simplex)
            if not key or any(a >= b for a, b in zip(key, key[1:])):
                raise InvalidComplexError(
                    f'Simplex {simplex_name(key)} must list strictly increasing vertices')
            if stage < filtration_start:
                raise InvalidComplexError(
                    f'Simplex {simplex_name(key)} enters at stage {stage} before '
                    f'the filtration starts at {filtration_start}')
            self.simplices[key] = int(stage)
        self._validate()

    def _validate(self) -> None:
        for simplex, stage in self.simplices.items():
            for face in faces(simplex):
                if face not in self.simplices:
                    raise InvalidComplexError(
                        f'Face {simplex_name(face)} of {simplex_name(simplex)} is missing')
                if self.simplices[face] > stage:
                    raise InvalidComplexError(
                        f'Face {simplex_name(face)} enters at stage {self.simplices[face]}, '
                        f'after {simplex_name(simplex)} at stage {stage}')

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @property
    def max_filtration(self) -> int:
        return max(self.simplices.values(), default=self.filtration_start)

    def ordered(self, n: int) -> List[Simplex]:
        """
        n-simplices ordered by stage, then lexicographically.
        """
        return sorted((s for s in self.simplices if len(s) == n + 1),
                      key=lambda s: (self.simplices[s], s))

    def __len__(self) -> int:
        return len(self.simplices)


def chain_complex_of(complex_: FilteredSimplicialComplex,
                     filtration_start: Optional[int] = None) -> FilteredChainComplex:
    """
    Simplicial chain complex with d(v0..vk) = sum (-1)^i (v0..^vi..vk).
    :param complex_: filtered simplicial complex
    :param filtration_start: overrides the start stage stored on the complex
    :return: FilteredChainComplex named by simplex
    """
    start = complex_.filtration_start if filtration_start is None else filtration_start
    top = complex_.dimension
    ordered = {n: complex_.ordered(n) for n in range(0, top + 1)}
    basis = {n: [simplex_name(s) for s in simplices] for n, simplices in ordered.items()}
    stages = {n: [complex_.simplices[s] for s in simplices] for n, simplices in ordered.items()}
    differentials = {}
    for n in range(1, top + 1):
        position = {s: idx for idx, s in enumerate(ordered[n - 1])}
        mat = zeros(len(ordered[n - 1]), len(ordered[n]))
        for j, simplex in enumerate(ordered[n]):
            for i, face in enumerate(faces(simplex)):
                mat[position[face], j] += (-1) ** i
        differentials[n] = mat
    logger.debug('Simplicial chain complex with ranks %s',
                 {n: len(s) for n, s in ordered.items()})
    return FilteredChainComplex(basis, differentials, stages, filtration_start=start,
                                max_filtration=complex_.max_filtration)
