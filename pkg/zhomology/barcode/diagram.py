"""
Integer barcode diagrams in the stagewise and the alternative description.
"""
import logging
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.constants import INFINITY
from zhomology.linalg.field import check_field
from zhomology.linalg.presentation import normalize_divisors, quotient_presentation
from zhomology.persistence.field import field_barcode
from zhomology.persistence.groups import bd_group, total_prst_group, triple_prst_group
from zhomology.state import BarcodeMode

logger = logging.getLogger(__name__)

Stage = Union[int, float]


class IntegerBar(NamedTuple):
    """
    Bar [birth, death) in degree n. In stagewise mode group is H^{i,i,k} and quotient
    the step H^{i,i,k} / H^{i,i,k-1}; in alternative mode both are the cyclic summand.
    """
    n: int
    birth: int
    death: Stage
    group: Tuple[int, ...]
    quotient: Tuple[int, ...]

    @property
    def infinite(self) -> bool:
        return self.death == INFINITY


class ExtensionLink(NamedTuple):
    """
    Bars (indices into the diagram) whose classes combine into a non-split extension.
    """
    bars: Tuple[int, ...]
    label: Tuple[int, ...]


class BarcodeDiagram(NamedTuple):
    mode: BarcodeMode
    bars: List[IntegerBar]
    links: List[ExtensionLink]
    filtration_start: int
    max_filtration: int
    degrees: List[int]
    field: Optional[int] = None

    def bars_in(self, n: int) -> List[IntegerBar]:
        return [bar for bar in self.bars if bar.n == n]


def _sort_key(bar: IntegerBar):
    return (bar.n, bar.birth, bar.death, bar.quotient)


def _stagewise_bars(complex_: FilteredChainComplex, n: int) -> List[IntegerBar]:
    """
    Walk H^{i-1,i} = H^{i,i,i} ⊆ H^{i,i,i+1} ⊆ ... ⊆ H^{i,i,m} ⊆ H^{i,i} for every birth i.
    """
    bars = []
    m = complex_.max_filtration
    for i in complex_.stage_range:
        previous = triple_prst_group(complex_, i, i, i, n)
        for k in list(range(i + 1, m + 1)) + [INFINITY]:
            current = triple_prst_group(complex_, i, i, k, n)
            if current.numerator == previous.numerator:
                continue
            step = quotient_presentation(current.numerator, previous.numerator)
            bars.append(IntegerBar(n, i, k, tuple(current.divisors), tuple(step.divisors)))
            previous = current
    return bars


def _alternative_bars(complex_: FilteredChainComplex, n: int) -> List[IntegerBar]:
    bars = []
    m = complex_.max_filtration
    for i in complex_.stage_range:
        for k in list(range(i + 1, m + 1)) + [INFINITY]:
            for divisor in bd_group(complex_, i, k, n).divisors:
                bars.append(IntegerBar(n, i, k, (divisor,), (divisor,)))
    return bars


def _extension_links(complex_: FilteredChainComplex,
                     bars: Sequence[IntegerBar]) -> List[ExtensionLink]:
    """
    For each window (i, j), compare H^{i,j}_n with the direct sum of the bars alive on it.
    """
    links: List[ExtensionLink] = []
    for n in sorted({bar.n for bar in bars}):
        for i in complex_.stage_range:
            for j in range(i, complex_.max_filtration + 1):
                alive = [idx for idx, bar in enumerate(bars)
                         if bar.n == n and bar.birth <= i and bar.death > j]
                if len(alive) < 2:
                    continue
                split = normalize_divisors([d for idx in alive for d in bars[idx].group])
                actual = total_prst_group(complex_, i, j, n).divisors
                if actual != split:
                    link = ExtensionLink(tuple(alive), tuple(actual))
                    if link not in links:
                        logger.debug('Window (%s, %s) in degree %s joins bars %s as %s',
                                     i, j, n, alive, actual)
                        links.append(link)
    return links


def build_barcode(complex_: FilteredChainComplex,
                  mode: Union[BarcodeMode, str] = BarcodeMode.STAGEWISE,
                  degrees: Optional[Sequence[int]] = None) -> BarcodeDiagram:
    """
    Build the integer barcode of the given degrees (all degrees by default).
    Bars are ordered by degree, then birth, then death.
    """
    mode = BarcodeMode(mode)
    degrees = list(degrees) if degrees is not None else complex_.degrees
    bars: List[IntegerBar] = []
    for n in degrees:
        if mode == BarcodeMode.STAGEWISE:
            bars += _stagewise_bars(complex_, n)
        else:
            bars += _alternative_bars(complex_, n)
    bars.sort(key=_sort_key)
    links = _extension_links(complex_, bars) if mode == BarcodeMode.ALTERNATIVE else []
    logger.info('Built %s barcode with %s bars and %s links', mode.value, len(bars), len(links))
    return BarcodeDiagram(mode, bars, links, complex_.filtration_start,
                          complex_.max_filtration, degrees)


def build_field_barcode(complex_: FilteredChainComplex, p: Union[int, str] = 0,
                        degrees: Optional[Sequence[int]] = None) -> BarcodeDiagram:
    """
    Classical barcode over Q (p = 0) or GF(p): one bar per field summand.
    """
    prime = check_field(p)
    degrees = list(degrees) if degrees is not None else complex_.degrees
    bars = [IntegerBar(bar.n, bar.birth, bar.death, (0,), (0,))
            for bar in field_barcode(complex_, prime) if bar.n in degrees]
    bars.sort(key=_sort_key)
    logger.info('Built field barcode over characteristic %s with %s bars', prime, len(bars))
    return BarcodeDiagram(BarcodeMode.STAGEWISE, bars, [], complex_.filtration_start,
                          complex_.max_filtration, degrees, prime)
