"""
Rank computations over Q and over prime fields GF(p).
"""
import logging
from typing import Union

import numpy as np

from zhomology import FieldError
from zhomology.linalg.matrix import IntMatrix, smith

logger = logging.getLogger(__name__)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    factor = 2
    while factor * factor <= p:
        if p % factor == 0:
            return False
        factor += 1
    return True


def check_field(p: Union[int, str, None]) -> int:
    """
    Normalize a field characteristic: 'Q', 'q' and 0 mean the rationals.
    :return: 0 or a prime
    :raises FieldError: anything else
    """
    if p is None or (isinstance(p, str) and p.upper() == 'Q'):
        return 0
    try:
        value = int(p)
    except (TypeError, ValueError):
        raise FieldError(f'Field must be Q or a prime, got {p!r}')
    if value != 0 and not is_prime(value):
        raise FieldError(f'Field characteristic {value} is not a prime')
    return value


def field_rank(mat: IntMatrix, p: int) -> int:
    """
    Rank of an integer matrix after reduction to the field of characteristic p.
    p = 0 uses the Smith form over the integers, which has the rational rank.
    Elimination mod p runs on Python ints, so any prime is exact.
    """
    if 0 in mat.shape:
        return 0
    if p == 0:
        return smith(mat).rank
    work = np.array([[int(x) % p for x in row] for row in mat], dtype=object)
    rows, cols = work.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        candidates = np.flatnonzero(work[rank:, col] != 0)
        if candidates.size == 0:
            continue
        pivot_row = rank + int(candidates[0])
        if pivot_row != rank:
            work[[rank, pivot_row], :] = work[[pivot_row, rank], :]
        inverse = pow(int(work[rank, col]), p - 2, p)
        work[rank, :] = (work[rank, :] * inverse) % p
        for row in range(rows):
            if row != rank and work[row, col]:
                work[row, :] = (work[row, :] - work[row, col] * work[rank, :]) % p
        rank += 1
    return rank
