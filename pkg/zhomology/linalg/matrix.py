"""
Exact integer matrices and their Smith / Hermite normal forms.

Matrices are numpy arrays of dtype object holding Python ints, so entries never overflow.
"""
import logging
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from zhomology import ShapeMismatchError

logger = logging.getLogger(__name__)

IntMatrix = np.ndarray


def zeros(rows: int, cols: int) -> IntMatrix:
    return np.zeros((rows, cols), dtype=object)


def identity(size: int) -> IntMatrix:
    mat = zeros(size, size)
    for i in range(size):
        mat[i, i] = 1
    return mat


def as_int_matrix(data) -> IntMatrix:
    """
    Convert any 2-d array-like of integers into an exact object matrix.
    """
    arr = np.asarray(data, dtype=object)
    if arr.ndim != 2:
        raise ShapeMismatchError(f'Expected a 2-dimensional matrix, got {arr.ndim} dimensions')
    out = np.empty(arr.shape, dtype=object)
    for idx, value in np.ndenumerate(arr):
        out[idx] = int(value)
    return out


def int_matrix(rows: Iterable[Iterable[int]], shape: Optional[Tuple[int, int]] = None) -> IntMatrix:
    """
    Build a matrix from nested rows.
    :param rows: row-major entries
    :param shape: required to give empty matrices their column count
    :return: exact integer matrix
    """
    data = [[int(x) for x in row] for row in rows]
    if not data:
        return zeros(*(shape or (0, 0)))
    width = len(data[0])
    if any(len(row) != width for row in data):
        raise ShapeMismatchError('Matrix rows have unequal length')
    mat = zeros(len(data), width)
    for i, row in enumerate(data):
        for j, value in enumerate(row):
            mat[i, j] = value
    if shape is not None and mat.shape != tuple(shape):
        raise ShapeMismatchError(f'Expected shape {tuple(shape)}, got {mat.shape}')
    return mat


def from_columns(columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
    mat = zeros(rows, len(columns))
    for j, column in enumerate(columns):
        if len(column) != rows:
            raise ShapeMismatchError(f'Column {j} has {len(column)} entries, expected {rows}')
        for i, value in enumerate(column):
            mat[i, j] = int(value)
    return mat


def diagonal(entries: Sequence[int]) -> IntMatrix:
    mat = zeros(len(entries), len(entries))
    for i, value in enumerate(entries):
        mat[i, i] = int(value)
    return mat


def hstack(blocks: Sequence[IntMatrix], rows: int) -> IntMatrix:
    """
    Concatenate matrices side by side; rows fixes the height when blocks is empty.
    """
    for block in blocks:
        if block.shape[0] != rows:
            raise ShapeMismatchError(f'Cannot stack a {block.shape[0]}-row block onto {rows} rows')
    if not blocks:
        return zeros(rows, 0)
    return np.concatenate(list(blocks), axis=1)


def submatrix(mat: IntMatrix, rows: Sequence[int], cols: Sequence[int]) -> IntMatrix:
    row_idx = np.asarray(rows, dtype=np.intp)
    col_idx = np.asarray(cols, dtype=np.intp)
    return mat[row_idx, :][:, col_idx]


def matmul(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    if left.shape[1] != right.shape[0]:
        raise ShapeMismatchError(f'Cannot multiply {left.shape} by {right.shape}')
    if 0 in (left.shape[0], left.shape[1], right.shape[1]):
        return zeros(left.shape[0], right.shape[1])
    return np.dot(left, right)


def apply(mat: IntMatrix, vector: Sequence[int]) -> List[int]:
    """
    Matrix times column vector, as a list of Python ints.
    """
    if mat.shape[1] != len(vector):
        raise ShapeMismatchError(f'Cannot apply a {mat.shape} matrix to {len(vector)} coordinates')
    return [sum(int(a) * int(b) for a, b in zip(row, vector)) for row in mat]


def is_zero(mat: IntMatrix) -> bool:
    return all(x == 0 for x in mat.flat)


def equal(left: IntMatrix, right: IntMatrix) -> bool:
    return left.shape == right.shape and all(a == b for a, b in zip(left.flat, right.flat))


class SmithDecomposition(NamedTuple):
    """
    U·A·V = D with U, V unimodular and D in Smith normal form.
    U_inv is the inverse of U, tracked during elimination.
    """
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix

    @property
    def divisors(self) -> List[int]:
        size = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(size)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.divisors if d != 0)


class _Elimination:
    """
    Row and column operations applied to D together with the transforms.
    """

    def __init__(self, mat: IntMatrix) -> None:
        rows, cols = mat.shape
        self.d = mat.copy()
        self.u = identity(rows)
        self.u_inv = identity(rows)
        self.v = identity(cols)

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.d, self.u):
            mat[[i, j], :] = mat[[j, i], :]
        self.u_inv[:, [i, j]] = self.u_inv[:, [j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        for mat in (self.d, self.v):
            mat[:, [i, j]] = mat[:, [j, i]]

    def add_row(self, target: int, source: int, factor: int) -> None:
        # row_target += factor * row_source
        self.d[target, :] = self.d[target, :] + factor * self.d[source, :]
        self.u[target, :] = self.u[target, :] + factor * self.u[source, :]
        self.u_inv[:, source] = self.u_inv[:, source] - factor * self.u_inv[:, target]

    def add_col(self, target: int, source: int, factor: int) -> None:
        self.d[:, target] = self.d[:, target] + factor * self.d[:, source]
        self.v[:, target] = self.v[:, target] + factor * self.v[:, source]

    def negate_row(self, i: int) -> None:
        self.d[i, :] = -self.d[i, :]
        self.u[i, :] = -self.u[i, :]
        self.u_inv[:, i] = -self.u_inv[:, i]

    def smallest_entry(self, t: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int]] = None
        rows, cols = self.d.shape
        for i in range(t, rows):
            for j in range(t, cols):
                value = self.d[i, j]
                if value != 0 and (best is None or abs(value) < abs(self.d[best])):
                    best = (i, j)
        return best

    def smallest_remainder(self, t: int) -> Optional[Tuple[int, int]]:
        best: Optional[Tuple[int, int]] = None
        rows, cols = self.d.shape
        candidates = [(t, j) for j in range(t + 1, cols)] + [(i, t) for i in range(t + 1, rows)]
        for pos in candidates:
            value = self.d[pos]
            if value != 0 and (best is None or abs(value) < abs(self.d[best])):
                best = pos
        return best

    def non_divisible(self, t: int) -> Optional[int]:
        pivot = self.d[t, t]
        rows, cols = self.d.shape
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if self.d[i, j] % pivot != 0:
                    return i
        return None

    def clear(self, t: int) -> None:
        rows, cols = self.d.shape
        while True:
            pivot = self.d[t, t]
            for i in range(t + 1, rows):
                quotient = self.d[i, t] // pivot
                if quotient:
                    self.add_row(i, t, -quotient)
            for j in range(t + 1, cols):
                quotient = self.d[t, j] // pivot
                if quotient:
                    self.add_col(j, t, -quotient)
            remainder = self.smallest_remainder(t)
            if remainder is not None:
                i, j = remainder
                if i == t:
                    self.swap_cols(t, j)
                else:
                    self.swap_rows(t, i)
                continue
            row = self.non_divisible(t)
            if row is not None:
                self.add_row(t, row, 1)
                continue
            return


def smith(mat: IntMatrix) -> SmithDecomposition:
    """
    Smith normal form by pivoting on the entry of smallest absolute value,
    ties broken by the lowest (row, col).
    :param mat: any integer matrix, empty shapes included
    :return: SmithDecomposition with U·mat·V = D
    """
    state = _Elimination(as_int_matrix(mat))
    rows, cols = state.d.shape
    for t in range(min(rows, cols)):
        pos = state.smallest_entry(t)
        if pos is None:
            break
        state.swap_rows(t, pos[0])
        state.swap_cols(t, pos[1])
        state.clear(t)
        if state.d[t, t] < 0:
            state.negate_row(t)
    return SmithDecomposition(U=state.u, D=state.d, V=state.v, U_inv=state.u_inv)


def _combine(column: List[int], other: List[int], factor: int) -> List[int]:
    return [a - factor * b for a, b in zip(column, other)]


def hermite(mat: IntMatrix) -> IntMatrix:
    """
    Column Hermite normal form: zero columns dropped, pivot rows strictly increasing
    from left to right, positive pivots, and every entry to the left of a pivot
    reduced into [0, pivot). Equal column lattices give identical results.
    """
    mat = as_int_matrix(mat)
    rows = mat.shape[0]
    pending = [list(mat[:, j]) for j in range(mat.shape[1])]
    pending = [col for col in pending if any(col)]
    basis: List[List[int]] = []
    pivots: List[int] = []

    for row in range(rows):
        active = [col for col in pending if col[row] != 0]
        if not active:
            continue
        rest = [col for col in pending if col[row] == 0]
        while len(active) > 1:
            active.sort(key=lambda col: abs(col[row]))
            head = active[0]
            survivors = [head]
            for col in active[1:]:
                col = _combine(col, head, col[row] // head[row])
                if col[row] != 0:
                    survivors.append(col)
                elif any(col):
                    rest.append(col)
            active = survivors
        head = active[0]
        if head[row] < 0:
            head = [-x for x in head]
        basis.append(head)
        pivots.append(row)
        pending = rest

    for k, row in enumerate(pivots):
        for j in range(k):
            factor = basis[j][row] // basis[k][row]
            if factor:
                basis[j] = _combine(basis[j], basis[k], factor)

    return from_columns(basis, rows)


def pivot_rows(hnf: IntMatrix) -> List[int]:
    """
    Row index of the leading nonzero entry of each column of a Hermite normal form.
    """
    result = []
    for j in range(hnf.shape[1]):
        result.append(next(i for i in range(hnf.shape[0]) if hnf[i, j] != 0))
    return result
