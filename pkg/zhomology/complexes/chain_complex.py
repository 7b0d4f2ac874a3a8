"""
Filtered chain complexes of free abelian groups and their filtration lattices.
"""
import logging
import threading
from functools import partial
from operator import attrgetter
from typing import (Any, Callable, Dict, Hashable, List, Mapping, Optional,
                    Sequence, Tuple)

from cachetools import LRUCache, cachedmethod
from cachetools.keys import hashkey

from zhomology import InvalidComplexError, ShapeMismatchError
from zhomology.constants import DEFAULT_FILTRATION_START_CHAIN
from zhomology.linalg.lattice import (Lattice, coordinate_lattice, embed, image_lattice,
                                      kernel_lattice, lattice_intersection)
from zhomology.linalg.matrix import (IntMatrix, apply, as_int_matrix, matmul,
                                     submatrix, zeros)

logger = logging.getLogger(__name__)

CACHE_SIZE = 8192


class FilteredChainComplex(object):
    """
    Finite free chain complex with a filtration index per generator.

    basis[n] names the generators of degree n, differentials[n] is the matrix of
    d_n: C_n -> C_{n-1} (rank(n-1) rows, rank(n) columns) and stages[n] holds the
    filtration index of every generator of degree n.
    Degrees form a contiguous range. Any degree outside of it has rank 0.
    """

    def __init__(self, basis: Mapping[int, Sequence[str]],
                 differentials: Optional[Mapping[int, Any]] = None,
                 stages: Optional[Mapping[int, Sequence[int]]] = None,
                 filtration_start: int = DEFAULT_FILTRATION_START_CHAIN,
                 max_filtration: Optional[int] = None) -> None:
        differentials = differentials or {}
        stages = stages or {}
        if filtration_start not in (0, 1):
            raise InvalidComplexError(f'Filtration start must be 0 or 1, got {filtration_start}')
        self.filtration_start = filtration_start

        used = sorted(n for n, names in basis.items() if len(names))
        low, high = (used[0], used[-1]) if used else (0, 0)
        self._degrees = list(range(low, high + 1))
        self._basis: Dict[int, List[str]] = {n: list(basis.get(n, [])) for n in self._degrees}
        self._stages: Dict[int, List[int]] = {}
        for n in self._degrees:
            values = [int(s) for s in stages.get(n, [filtration_start] * self.rank(n))]
            if len(values) != self.rank(n):
                raise ShapeMismatchError(
                    f'Degree {n} has {self.rank(n)} generators but {len(values)} stages')
            self._stages[n] = values

        all_stages = [s for n in self._degrees for s in self._stages[n]]
        self.max_filtration = max_filtration if max_filtration is not None else max(
            all_stages + [filtration_start])
        for n in self._degrees:
            for name, stage in zip(self._basis[n], self._stages[n]):
                if not filtration_start <= stage <= self.max_filtration:
                    raise InvalidComplexError(
                        f'Generator {name} has stage {stage} outside '
                        f'[{filtration_start}, {self.max_filtration}]')

        self._differentials: Dict[int, IntMatrix] = {}
        for n in self._degrees:
            shape = (self.rank(n - 1), self.rank(n))
            given = differentials.get(n)
            if given is None or 0 in shape:
                mat = zeros(*shape)
            else:
                mat = as_int_matrix(given)
            if mat.shape != shape:
                raise ShapeMismatchError(
                    f'Differential d_{n} has shape {mat.shape}, expected {shape}')
            mat.setflags(write=False)
            self._differentials[n] = mat

        self._index = {name: (n, idx) for n in self._degrees
                       for idx, name in enumerate(self._basis[n])}
        self._check_square_zero()
        self._check_filtration()

        self._cache: LRUCache = LRUCache(maxsize=CACHE_SIZE)
        self._lock = threading.Lock()

    def _check_square_zero(self) -> None:
        for n in self._degrees:
            composite = matmul(self.differential(n - 1), self.differential(n))
            for j in range(composite.shape[1]):
                if any(composite[:, j]):
                    raise InvalidComplexError(
                        f'd∘d is not zero on generator {self._basis[n][j]} (degree {n})')

    def _check_filtration(self) -> None:
        for n in self._degrees:
            mat = self.differential(n)
            for j, stage in enumerate(self._stages[n]):
                for i in range(mat.shape[0]):
                    if mat[i, j] and self._stages[n - 1][i] > stage:
                        raise InvalidComplexError(
                            f'Boundary of {self._basis[n][j]} (stage {stage}) involves '
                            f'{self._basis[n - 1][i]} at stage {self._stages[n - 1][i]}')

    @property
    def degrees(self) -> List[int]:
        return list(self._degrees)

    @property
    def stage_range(self) -> range:
        return range(self.filtration_start, self.max_filtration + 1)

    def basis(self, n: int) -> List[str]:
        return list(self._basis.get(n, []))

    def rank(self, n: int) -> int:
        return len(self._basis.get(n, []))

    def stages(self, n: int) -> List[int]:
        return list(self._stages.get(n, []))

    def differential(self, n: int) -> IntMatrix:
        if n in self._differentials:
            return self._differentials[n]
        return zeros(self.rank(n - 1), self.rank(n))

    def generator_index(self, name: str) -> Tuple[int, int]:
        """
        :return: (degree, position) of a named generator
        :raises KeyError: unknown name
        """
        return self._index[name]

    def boundary(self, n: int, chain: Sequence[int]) -> List[int]:
        return apply(self.differential(n), chain)

    def is_cycle(self, n: int, chain: Sequence[int]) -> bool:
        return not any(self.boundary(n, chain))

    def chain_stage(self, n: int, chain: Sequence[int]) -> int:
        """
        Smallest stage p with chain in C^p; filtration_start - 1 for the zero chain.
        """
        present = [s for s, c in zip(self._stages.get(n, []), chain) if c]
        return max(present) if present else self.filtration_start - 1

    def positions(self, p: int, n: int) -> List[int]:
        return [idx for idx, stage in enumerate(self._stages.get(n, [])) if stage <= p]

    def memoize(self, key: Hashable, factory: Callable[[], Any]) -> Any:
        """
        Per-complex memo shared with the lattice queries below.
        """
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = factory()
        with self._lock:
            self._cache[key] = value
        return value

    @cachedmethod(attrgetter('_cache'), key=partial(hashkey, 'filtration_submodule'),
                  lock=attrgetter('_lock'))
    def filtration_submodule(self, p: int, n: int) -> Lattice:
        """
        C^p_n, spanned by the generators of degree n with stage <= p.
        """
        return coordinate_lattice(self.positions(p, n), self.rank(n))

    @cachedmethod(attrgetter('_cache'), key=partial(hashkey, 'almost_cycles'),
                  lock=attrgetter('_lock'))
    def almost_cycles(self, r: int, p: int, n: int) -> Lattice:
        """
        Z^r_{p,n-p}: chains of C^p_n whose boundary lies in C^{p-r}_{n-1}.
        """
        cols = self.positions(p, n)
        rows = [idx for idx, stage in enumerate(self._stages.get(n - 1, [])) if stage > p - r]
        restricted = submatrix(self.differential(n), rows, cols)
        logger.debug('Almost cycles r=%s p=%s n=%s from a %s matrix', r, p, n, restricted.shape)
        return embed(kernel_lattice(restricted), cols, self.rank(n))

    @cachedmethod(attrgetter('_cache'), key=partial(hashkey, 'cycles'),
                  lock=attrgetter('_lock'))
    def cycles(self, p: int, n: int) -> Lattice:
        """
        ker d_n ∩ C^p_n.
        """
        cols = self.positions(p, n)
        rows = list(range(self.rank(n - 1)))
        restricted = submatrix(self.differential(n), rows, cols)
        return embed(kernel_lattice(restricted), cols, self.rank(n))

    @cachedmethod(attrgetter('_cache'), key=partial(hashkey, 'boundary_image'),
                  lock=attrgetter('_lock'))
    def boundary_image(self, r: int, p: int, n: int) -> Lattice:
        """
        d_{n+1}(Z^r_{p,n+1-p}) as a lattice of degree-n chains.
        """
        source = self.almost_cycles(r, p, n + 1)
        return image_lattice(matmul(self.differential(n + 1), source.generators))

    @cachedmethod(attrgetter('_cache'), key=partial(hashkey, 'boundaries'),
                  lock=attrgetter('_lock'))
    def boundaries(self, p: int, n: int) -> Lattice:
        """
        Boundaries of the whole complex lying in C^p_n.
        """
        every = image_lattice(self.differential(n + 1))
        return lattice_intersection(every, self.filtration_submodule(p, n))

    def __repr__(self) -> str:
        ranks = {n: self.rank(n) for n in self._degrees}
        return (f'FilteredChainComplex(ranks={ranks}, stages={self.filtration_start}..'
                f'{self.max_filtration})')


def filtration_submodule(complex_: FilteredChainComplex, p: int, n: int) -> Lattice:
    return complex_.filtration_submodule(p, n)


def almost_cycles(complex_: FilteredChainComplex, r: int, p: int, q: int) -> Lattice:
    if r < 0:
        raise ValueError(f'Level must be non-negative, got {r}')
    return complex_.almost_cycles(r, p, p + q)
