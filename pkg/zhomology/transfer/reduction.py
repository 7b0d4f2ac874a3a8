"""
Reductions (f, g, h) between filtered chain complexes: verification of the five
identities, filtration checks and the filtration order of the homotopy.
"""
import logging
from typing import Dict, List, Mapping, NamedTuple, Optional

from zhomology import ShapeMismatchError
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.linalg.matrix import IntMatrix, as_int_matrix, identity, matmul, zeros

logger = logging.getLogger(__name__)

CHAIN_MAP_F = 'f is a chain map'
CHAIN_MAP_G = 'g is a chain map'
IDENTITY_FG = '(1) fg = id'
IDENTITY_HOMOTOPY = '(2) gf + dh + hd = id'
IDENTITY_FH = '(3) fh = 0'
IDENTITY_HG = '(4) hg = 0'
IDENTITY_HH = '(5) hh = 0'

ChainMap = Dict[int, IntMatrix]


def _degree_span(*complexes: FilteredChainComplex) -> range:
    low = min(min(c.degrees) for c in complexes)
    high = max(max(c.degrees) for c in complexes)
    return range(low - 1, high + 2)


def normalize_map(maps: Optional[Mapping[int, object]], source: FilteredChainComplex,
                  target: FilteredChainComplex, shift: int = 0, name: str = 'map') -> ChainMap:
    """
    Matrices of a map of degree `shift`, one per source degree, zero where omitted.
    :raises ShapeMismatchError: a given matrix does not fit the bases
    """
    maps = maps or {}
    result: ChainMap = {}
    for n in _degree_span(source, target):
        shape = (target.rank(n + shift), source.rank(n))
        given = maps.get(n)
        if given is None or 0 in shape:
            mat = zeros(*shape)
        else:
            mat = as_int_matrix(given)
        if mat.shape != shape:
            raise ShapeMismatchError(f'{name} in degree {n} has shape {mat.shape}, '
                                     f'expected {shape}')
        result[n] = mat
    return result


class Reduction(object):
    """
    Reduction of the top complex D onto the bottom complex C:
    f: D -> C and g: C -> D chain maps, h: D -> D of degree +1.
    """

    def __init__(self, top: FilteredChainComplex, bottom: FilteredChainComplex,
                 f: Optional[Mapping[int, object]] = None,
                 g: Optional[Mapping[int, object]] = None,
                 h: Optional[Mapping[int, object]] = None) -> None:
        self.top = top
        self.bottom = bottom
        self.f = normalize_map(f, top, bottom, 0, 'f')
        self.g = normalize_map(g, bottom, top, 0, 'g')
        self.h = normalize_map(h, top, top, 1, 'h')

    @classmethod
    def identity(cls, complex_: FilteredChainComplex) -> 'Reduction':
        maps = {n: identity(complex_.rank(n)) for n in complex_.degrees}
        return cls(complex_, complex_, maps, maps, {})

    def degrees(self) -> range:
        return _degree_span(self.top, self.bottom)

    def f_at(self, n: int) -> IntMatrix:
        return self.f.get(n, zeros(self.bottom.rank(n), self.top.rank(n)))

    def g_at(self, n: int) -> IntMatrix:
        return self.g.get(n, zeros(self.top.rank(n), self.bottom.rank(n)))

    def h_at(self, n: int) -> IntMatrix:
        return self.h.get(n, zeros(self.top.rank(n + 1), self.top.rank(n)))


class Violation(NamedTuple):
    identity: str
    degree: int
    generator: str


class ReductionReport(NamedTuple):
    violations: List[Violation]

    @property
    def ok(self) -> bool:
        return not self.violations


def _offending(mat: IntMatrix, names: List[str], label: str, degree: int) -> List[Violation]:
    return [Violation(label, degree, names[j]) for j in range(mat.shape[1]) if any(mat[:, j])]


def verify_reduction(reduction: Reduction) -> ReductionReport:
    """
    Check the chain-map property of f and g and the five reduction identities exactly,
    degree by degree, naming every offending generator.
    """
    top, bottom = reduction.top, reduction.bottom
    f, g, h = reduction.f_at, reduction.g_at, reduction.h_at
    violations: List[Violation] = []
    for n in reduction.degrees():
        d_top, d_bottom = top.differential(n), bottom.differential(n)
        top_names, bottom_names = top.basis(n), bottom.basis(n)

        violations += _offending(matmul(d_bottom, f(n)) - matmul(f(n - 1), d_top),
                                 top_names, CHAIN_MAP_F, n)
        violations += _offending(matmul(d_top, g(n)) - matmul(g(n - 1), d_bottom),
                                 bottom_names, CHAIN_MAP_G, n)
        violations += _offending(matmul(f(n), g(n)) - identity(bottom.rank(n)),
                                 bottom_names, IDENTITY_FG, n)
        homotopy = (matmul(g(n), f(n)) + matmul(top.differential(n + 1), h(n))
                    + matmul(h(n - 1), d_top) - identity(top.rank(n)))
        violations += _offending(homotopy, top_names, IDENTITY_HOMOTOPY, n)
        violations += _offending(matmul(f(n + 1), h(n)), top_names, IDENTITY_FH, n)
        violations += _offending(matmul(h(n), g(n)), bottom_names, IDENTITY_HG, n)
        violations += _offending(matmul(h(n + 1), h(n)), top_names, IDENTITY_HH, n)
    for violation in violations:
        logger.info('Reduction identity %s fails in degree %s on %s', *violation)
    return ReductionReport(violations)


def filtered_map_ok(maps: Mapping[int, IntMatrix], source: FilteredChainComplex,
                    target: FilteredChainComplex, shift: int = 0) -> bool:
    """
    True iff every generator is sent into the same filtration stage of the target.
    """
    for n, mat in maps.items():
        source_stages, target_stages = source.stages(n), target.stages(n + shift)
        for j in range(mat.shape[1]):
            for i in range(mat.shape[0]):
                if mat[i, j] and target_stages[i] > source_stages[j]:
                    return False
    return True


class HomotopyOrder(NamedTuple):
    """
    Minimal s with h(C^p_n) inside D^{p+s}_{n+1}; 0 for h = 0.
    """
    s: int


def homotopy_order(reduction: Reduction) -> HomotopyOrder:
    top = reduction.top
    order = 0
    for n, mat in reduction.h.items():
        source_stages, target_stages = top.stages(n), top.stages(n + 1)
        for j in range(mat.shape[1]):
            for i in range(mat.shape[0]):
                if mat[i, j]:
                    order = max(order, target_stages[i] - source_stages[j])
    return HomotopyOrder(order)


def compose_reductions(outer: Reduction, inner: Reduction) -> Reduction:
    """
    D => C followed by C => B gives D => B with f = f'f, g = gg' and h = h + g h' f.
    :raises ShapeMismatchError: the bottom of outer is not the top of inner
    """
    if outer.bottom is not inner.top:
        raise ShapeMismatchError('Reductions do not compose: bottom and top differ')
    f, g, h = {}, {}, {}
    for n in _degree_span(outer.top, inner.bottom):
        f[n] = matmul(inner.f_at(n), outer.f_at(n))
        g[n] = matmul(outer.g_at(n), inner.g_at(n))
        h[n] = outer.h_at(n) + matmul(outer.g_at(n + 1), matmul(inner.h_at(n), outer.f_at(n)))
    return Reduction(outer.top, inner.bottom, f, g, h)


def reduction_filtered(reduction: Reduction) -> bool:
    """
    f and g both respect the filtration.
    """
    return (filtered_map_ok(reduction.f, reduction.top, reduction.bottom)
            and filtered_map_ok(reduction.g, reduction.bottom, reduction.top))
