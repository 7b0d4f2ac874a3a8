"""
Field-coefficient persistence: Betti tables, bar multiplicities and the classical
pairing by column reduction.
"""
import logging
from collections import Counter
from fractions import Fraction
from typing import Dict, List, NamedTuple, Union

import numpy as np

from zhomology import StageOrderError
from zhomology.complexes.chain_complex import FilteredChainComplex
from zhomology.constants import INFINITY
from zhomology.linalg.field import check_field, field_rank
from zhomology.linalg.matrix import submatrix

logger = logging.getLogger(__name__)

Stage = Union[int, float]


class FieldBettiTable(object):
    """
    β^{i,j}_n = rank of H^{i,j}_n over GF(p), or over Q when p = 0.
    values[i - start + 1, j - start + 1, degree position] for start-1 <= i <= j <= m.
    """

    def __init__(self, prime: int, filtration_start: int, max_filtration: int,
                 degrees: List[int], values: np.ndarray) -> None:
        self.prime = prime
        self.filtration_start = filtration_start
        self.max_filtration = max_filtration
        self.degrees = list(degrees)
        self.values = values

    def _offset(self, stage: int) -> int:
        return min(stage, self.max_filtration) - self.filtration_start + 1

    def beta(self, i: int, j: int, n: int) -> int:
        if i < self.filtration_start - 1 or i > j:
            raise StageOrderError(f'Betti number needs {self.filtration_start - 1} <= i <= j, '
                                  f'got i={i}, j={j}')
        if n not in self.degrees:
            return 0
        return int(self.values[self._offset(i), self._offset(j), self.degrees.index(n)])


def field_betti(complex_: FilteredChainComplex, p: Union[int, str] = 0) -> FieldBettiTable:
    """
    β^{i,j}_n = |C^i_n| - rank d_n|C^i - rank d_{n+1}|C^j + rank (d_{n+1}|C^j mod C^i).
    :raises FieldError: p is neither 0 nor prime
    """
    prime = check_field(p)
    start, m = complex_.filtration_start, complex_.max_filtration
    degrees = complex_.degrees
    size = m - start + 2
    values = np.zeros((size, size, len(degrees)), dtype=np.int64)
    for pos, n in enumerate(degrees):
        for i in range(start, m + 1):
            cols_i = complex_.positions(i, n)
            rank_here = field_rank(submatrix(complex_.differential(n),
                                             range(complex_.rank(n - 1)), cols_i), prime)
            outside = [idx for idx, stage in enumerate(complex_.stages(n)) if stage > i]
            for j in range(i, m + 1):
                cols_j = complex_.positions(j, n + 1)
                upper = submatrix(complex_.differential(n + 1), range(complex_.rank(n)), cols_j)
                values[i - start + 1, j - start + 1, pos] = (
                    len(cols_i) - rank_here - field_rank(upper, prime)
                    + field_rank(submatrix(upper, outside, range(len(cols_j))), prime))
    logger.debug('Betti table over characteristic %s for degrees %s', prime, degrees)
    return FieldBettiTable(prime, start, m, degrees, values)


def mu_counts(table: FieldBettiTable, i: int, k: Stage, n: int) -> int:
    """
    Multiplicity of the bar [i,k) in degree n:
    (β^{i,k-1} - β^{i,k}) - (β^{i-1,k-1} - β^{i-1,k}).
    k = INFINITY counts the bars [i,inf) as β^{i,m} - β^{i-1,m}.
    """
    start, m = table.filtration_start, table.max_filtration
    if i < start or i > m:
        raise StageOrderError(f'Birth stage {i} outside [{start}, {m}]')
    if k == INFINITY:
        return table.beta(i, m, n) - table.beta(i - 1, m, n)
    if not i < k <= m:
        raise StageOrderError(f'Death stage {k} outside ({i}, {m}]')
    k = int(k)
    return ((table.beta(i, k - 1, n) - table.beta(i, k, n))
            - (table.beta(i - 1, k - 1, n) - table.beta(i - 1, k, n)))


class FieldBar(NamedTuple):
    n: int
    birth: int
    death: Stage


def _reduce_column(column: Dict[int, Union[int, Fraction]],
                   pivot: Dict[int, Union[int, Fraction]], low: int,
                   prime: int) -> Dict[int, Union[int, Fraction]]:
    if prime:
        factor = column[low] * pow(int(pivot[low]), prime - 2, prime) % prime
    else:
        factor = Fraction(column[low]) / pivot[low]
    result = dict(column)
    for row, value in pivot.items():
        updated = result.get(row, 0) - factor * value
        if prime:
            updated %= prime
        if updated:
            result[row] = updated
        else:
            result.pop(row, None)
    return result


def field_barcode(complex_: FilteredChainComplex, p: Union[int, str] = 0) -> List[FieldBar]:
    """
    Classical persistence pairing over a field. Generators are ordered by
    (stage, degree, position), each column is reduced against earlier pivots, and
    every pivot pairs a birth with a death. Zero-length pairs are dropped.
    :return: bars sorted by degree, birth, death
    """
    prime = check_field(p)
    order = sorted(((stage, n, idx) for n in complex_.degrees
                    for idx, stage in enumerate(complex_.stages(n))))
    position = {(n, idx): pos for pos, (_, n, idx) in enumerate(order)}

    pivots: Dict[int, Dict[int, Union[int, Fraction]]] = {}
    paired = set()
    bars: List[FieldBar] = []
    for column_pos, (stage, n, idx) in enumerate(order):
        column: Dict[int, Union[int, Fraction]] = {}
        mat = complex_.differential(n)
        for row in range(mat.shape[0]):
            value = int(mat[row, idx]) % prime if prime else Fraction(int(mat[row, idx]))
            if value:
                column[position[(n - 1, row)]] = value
        while column:
            low = max(column)
            if low not in pivots:
                break
            column = _reduce_column(column, pivots[low], low, prime)
        if column:
            low = max(column)
            pivots[low] = column
            paired.add(low)
            paired.add(column_pos)
            birth_stage, birth_degree, _ = order[low]
            if birth_stage != stage:
                bars.append(FieldBar(birth_degree, birth_stage, stage))
    for column_pos, (stage, n, _) in enumerate(order):
        if column_pos not in paired:
            bars.append(FieldBar(n, stage, INFINITY))
    bars.sort(key=lambda bar: (bar.n, bar.birth, bar.death))
    logger.debug('Field barcode over characteristic %s has %s bars', prime, len(bars))
    return bars


def bar_multiplicities(bars: List[FieldBar]) -> Counter:
    return Counter(bars)
