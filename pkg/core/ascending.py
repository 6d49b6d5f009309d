# -*- coding: utf-8 -*-
"""
Ascending matrices.

N(d, b) is the set of nonnegative integer k x n matrices with row sums d and
column sums b. A member is ascending when its columns form a chain under the
dominance order. The column-sum sequence used throughout is n^- = (1, ..., n).
"""
from typing import Sequence, Tuple, Iterator, Union, List

import numpy as np
from loguru import logger

from core.error import SearchExhausted, ConditionFailed, DimensionMismatch
from core.graph import dominance_leq, DegreeVector
from core.reduction import check_sufficient

MatrixLike = Union[np.ndarray, Sequence[Sequence[int]], 'AscendingMatrix']


def ascending_sequence(x: int) -> Tuple[int, ...]:
    """x^- = (1, 2, ..., x)"""
    return tuple(range(1, x + 1))


def constant_sequence(x: int, r: int) -> Tuple[int, ...]:
    """x^r, r entries equal to x"""
    return (x,) * r


class AscendingMatrix(object):
    """read-only k x n matrix together with the margins it was built for"""

    def __init__(self, matrix: MatrixLike, d: Sequence[int], b: Sequence[int]):
        arr = _as_array(matrix)
        self._matrix = arr.copy()
        self._matrix.setflags(write=False)
        self.d = tuple(int(v) for v in d)
        self.b = tuple(int(v) for v in b)
        if not is_valid(self._matrix, self.d, self.b):
            raise ValueError('matrix is not an ascending member of N({}, {}):\n{}'.format(self.d, self.b, arr))

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def shape(self) -> Tuple[int, int]:
        return self._matrix.shape

    def column(self, j: int) -> Tuple[int, ...]:
        """1-based column A_j"""
        return tuple(int(v) for v in self._matrix[:, j - 1])

    def entry(self, i: int, j: int) -> int:
        return int(self._matrix[i - 1, j - 1])

    def rows(self) -> List[Tuple[int, ...]]:
        return [tuple(int(v) for v in row) for row in self._matrix]

    def __eq__(self, other):
        if isinstance(other, AscendingMatrix):
            other = other.matrix
        try:
            other = np.asarray(other)
        except (TypeError, ValueError):
            return NotImplemented
        return other.shape == self._matrix.shape and bool(np.array_equal(other, self._matrix))

    def __hash__(self):
        return hash((self._matrix.shape, self._matrix.tobytes()))

    def __repr__(self):
        return 'AscendingMatrix({})'.format(self.rows())


def _as_array(matrix: MatrixLike) -> np.ndarray:
    if isinstance(matrix, AscendingMatrix):
        return matrix.matrix
    arr = np.asarray(matrix, dtype=np.int64)
    if arr.ndim == 1 and arr.size == 0:
        arr = arr.reshape(0, 0)
    if arr.ndim != 2:
        raise DimensionMismatch('expected a 2-d matrix, got shape {}'.format(arr.shape))
    return arr


def is_ascending(matrix: MatrixLike) -> bool:
    arr = _as_array(matrix)
    return all(dominance_leq(arr[:, j], arr[:, j + 1]) for j in range(arr.shape[1] - 1))


def is_valid(matrix: MatrixLike, d: Sequence[int], b: Sequence[int]) -> bool:
    """membership in N(d, b) plus the ascending chain A_1 <= A_2 <= ... <= A_n"""
    try:
        arr = _as_array(matrix)
    except DimensionMismatch:
        return False
    k, n = len(d), len(b)
    if arr.shape != (k, n):
        return False
    if np.any(arr < 0):
        return False
    if not np.array_equal(arr.sum(axis=1), np.asarray(d, dtype=np.int64).reshape(k)):
        return False
    if not np.array_equal(arr.sum(axis=0), np.asarray(b, dtype=np.int64).reshape(n)):
        return False
    return is_ascending(arr)


def build_T(k: int, n: int) -> np.ndarray:
    """0/1 staircase, t_ij = 1 iff i + j >= k + 1"""
    if not 1 <= k <= n:
        raise DimensionMismatch('build_T needs 1 <= k <= n, got k={}, n={}'.format(k, n))
    i = np.arange(1, k + 1).reshape(k, 1)
    j = np.arange(1, n + 1).reshape(1, n)
    return (i + j >= k + 1).astype(np.int64)


def compose(first: MatrixLike, second: MatrixLike) -> np.ndarray:
    """
    B + T. Margins add, so the sum lies in N(a + a', b + b') whenever both
    summands are members. Ascending is not closed under +: two ascending inputs
    whose sum breaks the chain raise ValueError.
    """
    a, t = _as_array(first), _as_array(second)
    if a.shape != t.shape:
        raise DimensionMismatch('compose shapes {} and {}'.format(a.shape, t.shape))
    if np.any(a < 0) or np.any(t < 0):
        raise ValueError('compose expects nonnegative matrices')
    total = a + t
    if is_ascending(a) and is_ascending(t) and not is_ascending(total):
        raise ValueError('compose: sum of ascending matrices is not ascending')
    return total


class _ColumnSearch(object):
    """
    Backtracking over columns m, m-1, ..., 1. Column j receives sum j, handed out
    greedily to the rows with the largest remaining degree (ties: larger row
    index first) and must be dominated by the column to its right.
    """

    def __init__(self, d: Sequence[int], m: int):
        self.d = tuple(int(v) for v in d)
        self.k = len(self.d)
        self.m = m
        self.nodes = 0
        self._dead = set()

    def run(self):
        cols = [None] * self.m
        if self._fill(self.m, list(self.d), None, cols):
            return np.array(cols, dtype=np.int64).T.reshape(self.k, self.m)
        return None

    def _candidates(self, total: int, remaining: List[int], prev_sorted):
        order = sorted(range(self.k), key=lambda i: (-remaining[i], -i))
        cap = prev_sorted[-1] if prev_sorted is not None else total
        vec = [0] * self.k

        def _assign(pos, left):
            if left == 0:
                yield list(vec)
                return
            if pos == len(order):
                return
            # the rows after pos can absorb at most this much
            room = sum(min(remaining[i], cap) for i in order[pos + 1:])
            row = order[pos]
            hi = min(remaining[row], cap, left)
            lo = max(0, left - room)
            for v in range(hi, lo - 1, -1):
                vec[row] = v
                yield from _assign(pos + 1, left - v)
            vec[row] = 0

        for cand in _assign(0, total):
            if prev_sorted is None or all(a <= b for a, b in zip(sorted(cand), prev_sorted)):
                yield cand

    def _fill(self, j: int, remaining: List[int], prev_sorted, cols) -> bool:
        if j == 0:
            return not any(remaining)
        key = (j, tuple(remaining), prev_sorted)
        if key in self._dead:
            return False
        for cand in self._candidates(j, remaining, prev_sorted):
            self.nodes += 1
            left = [r - v for r, v in zip(remaining, cand)]
            cand_sorted = tuple(sorted(cand))
            if not self._can_finish(j - 1, left, cand_sorted):
                continue
            cols[j - 1] = cand
            if self._fill(j - 1, left, cand_sorted, cols):
                return True
        self._dead.add(key)
        return False

    @staticmethod
    def _can_finish(j: int, left: List[int], bound_sorted) -> bool:
        if j == 0:
            return not any(left)
        cap = bound_sorted[-1]
        nonzero = sum(1 for v in bound_sorted if v)
        if max(left) > sum(min(c, cap) for c in range(1, j + 1)):
            return False
        return sum(1 for r in left if r) <= sum(min(c, nonzero) for c in range(1, j + 1))


def construct_ascending(d: Sequence[int], m: int) -> AscendingMatrix:
    """
    first ascending member of N(d, m^-) in the fixed search order

    Raises:
        SearchExhausted: never expected, every d with sum m(m+1)/2 admits one
    """
    d = tuple(int(v) for v in d)
    if sum(d) != m * (m + 1) // 2 or any(v < 0 for v in d):
        raise ValueError('construct_ascending needs nonnegative d with sum {}, got {}'.format(m * (m + 1) // 2, d))
    search = _ColumnSearch(d, m)
    found = search.run()
    logger.debug('construct_ascending d={} m={} nodes={}', list(d), m, search.nodes)
    if found is None:
        logger.error('no ascending matrix for d={} m={}', list(d), m)
        raise SearchExhausted(d, m)
    return AscendingMatrix(found, d, ascending_sequence(m))


def construct_with_support(d: Sequence[int], n: int) -> AscendingMatrix:
    """
    A = A' + T with a_ij >= 1 whenever i + j >= k + 1.

    A' solves N(d', (n-k)^-) for d'_i = d_i - (n - k + i) and occupies the last
    n - k columns; the first k columns are zero in A'.
    """
    d = tuple(sorted(int(v) for v in d))
    if not check_sufficient(d, n):
        raise ConditionFailed(d, n)
    k = len(d)
    t = build_T(k, n)
    d_prime = tuple(d[i - 1] - (n - k + i) for i in range(1, k + 1))
    inner = construct_ascending(d_prime, n - k)
    a_prime = np.zeros((k, n), dtype=np.int64)
    a_prime[:, k:] = inner.matrix
    result = AscendingMatrix(compose(a_prime, t), d, ascending_sequence(n))
    assert all(result.entry(i, j) >= 1 for i in range(1, k + 1) for j in range(1, n + 1) if i + j >= k + 1)
    logger.debug("construct_with_support d={} n={} d'={}", list(d), n, list(d_prime))
    return result


def enumerate_members(d: Sequence[int], b: Sequence[int]) -> Iterator[np.ndarray]:
    """every member of N(d, b) exactly once, column by column"""
    d = [int(v) for v in d]
    b = [int(v) for v in b]
    k, n = len(d), len(b)
    if sum(d) != sum(b):
        return
    cols = []

    def _columns(total, remaining, row):
        if row == k - 1:
            if total <= remaining[row]:
                yield [total]
            return
        for v in range(min(total, remaining[row]), -1, -1):
            for rest in _columns(total - v, remaining, row + 1):
                yield [v] + rest

    def _walk(j, remaining):
        if j == n:
            if not any(remaining):
                yield np.array(cols, dtype=np.int64).T.reshape(k, n)
            return
        if k == 0:
            if b[j] == 0:
                cols.append([])
                yield from _walk(j + 1, remaining)
                cols.pop()
            return
        for col in _columns(b[j], remaining, 0):
            cols.append(col)
            yield from _walk(j + 1, [r - v for r, v in zip(remaining, col)])
            cols.pop()

    yield from _walk(0, d)
