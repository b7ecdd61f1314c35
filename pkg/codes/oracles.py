# codes/oracles.py — переборные проверки MDS-свойства и регулярности
# -----------------------------------------------------------------
from __future__ import annotations

import logging
from itertools import combinations, permutations

import numpy as np

from codes.parity import ParityCheck
from errors import InvalidParameter, TooLargeForOracle
from matrix import Matrix
from ring import RingSpec

logger = logging.getLogger(__name__)

MDS_MAX_N = 14
MDS_MAX_ROWS = 7
REGULAR_MAX_DIM = 8


def determinant(field: RingSpec, square: np.ndarray) -> np.ndarray:
    """Определитель методом Гаусса над полем."""
    m = square.shape[0]
    a = [[square[i, j] for j in range(m)] for i in range(m)]
    det = field.from_ints(1)
    for col in range(m):
        pivot = next((r for r in range(col, m) if field.nonzero_mask(a[r][col])), None)
        if pivot is None:
            return field.from_ints(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = field.neg(det)
        det = field.mul(det, a[col][col])
        inv = field.inv(a[col][col])
        for r in range(col + 1, m):
            if not field.nonzero_mask(a[r][col]):
                continue
            factor = field.mul(a[r][col], inv)
            for c in range(col, m):
                a[r][c] = field.sub(a[r][c], field.mul(factor, a[col][c]))
    return det


def cofactor_determinant(field: RingSpec, square: np.ndarray) -> np.ndarray:
    """Определитель по формуле Лейбница (только для маленьких m)."""
    m = square.shape[0]
    total = field.from_ints(0)
    for perm in permutations(range(m)):
        term = field.from_ints(1)
        for i, j in enumerate(perm):
            term = field.mul(term, square[i, j])
        inversions = sum(1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b])
        total = field.sub(total, term) if inversions % 2 else field.add(total, term)
    return total


def check_mds_parity(H: ParityCheck | Matrix) -> bool:
    """True ⇔ любые rows столбцов H линейно независимы."""
    mat = H.H if isinstance(H, ParityCheck) else H
    rows, n = mat.shape
    if n > MDS_MAX_N or rows > MDS_MAX_ROWS:
        raise TooLargeForOracle(f"{rows}x{n} parity check is beyond the brute-force oracle")
    if rows > n:
        raise InvalidParameter(f"{rows} rows but only {n} columns")
    field = mat.ring
    for cols in combinations(range(n), rows):
        sub = mat.data[:, list(cols)]
        if not field.nonzero_mask(determinant(field, sub)):
            logger.debug("columns %s of H are dependent", cols)
            return False
    return True


def check_k_regular(S: Matrix, k: int) -> bool:
    """True ⇔ все k×k подматрицы S невырождены."""
    if S.rows > REGULAR_MAX_DIM or S.cols > REGULAR_MAX_DIM:
        raise TooLargeForOracle(f"{S.rows}x{S.cols} is beyond the brute-force oracle")
    if k < 1:
        raise InvalidParameter(f"k must be ≥ 1, got {k}")
    field = S.ring
    for rows in combinations(range(S.rows), k):
        block = S.data[list(rows)]
        for cols in combinations(range(S.cols), k):
            if not field.nonzero_mask(determinant(field, block[:, list(cols)])):
                logger.debug("submatrix rows=%s cols=%s is singular", rows, cols)
                return False
    return True
