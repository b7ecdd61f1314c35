# matrix/ops.py — умножение, матрица·вектор, разреженность
# --------------------------------------------------------
from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from math import isqrt
from typing import Iterator, Literal

import numpy as np

from config import load_config
from errors import DimMismatch, NoWitness, RingMismatch
from matrix.dense import Matrix


# ── счётчик умножений в кольце ──────────────────────────────────────────────
class OpMeter:
    def __init__(self) -> None:
        self.count = 0


_meter: ContextVar[OpMeter | None] = ContextVar("elem_ops_meter", default=None)


@contextmanager
def op_meter() -> Iterator[OpMeter]:
    """Считает операции над элементами кольца внутри блока (вложенные блоки тоже).

    Умножения в произведениях; при сборке блочных матриц — записанные элементы.
    """
    outer = _meter.get()
    meter = OpMeter()
    token = _meter.set(meter)
    try:
        yield meter
    finally:
        _meter.reset(token)
        if outer is not None:
            outer.count += meter.count


def charge(ops: int) -> None:
    meter = _meter.get()
    if meter is not None:
        meter.count += ops


# ── произведения ────────────────────────────────────────────────────────────
def matmul(A: Matrix, B: Matrix, tile: int | None = None) -> Matrix:
    """Классическое блочное A·B."""
    if A.ring != B.ring:
        raise RingMismatch(f"{A.ring.token} vs {B.ring.token}")
    if A.cols != B.rows:
        raise DimMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    tile = tile or load_config().tile
    charge(A.rows * A.cols * B.cols)
    return Matrix(A.ring, A.ring.matmul(A.data, B.data, tile))


def matvec(A: Matrix, v: np.ndarray, tile: int | None = None) -> np.ndarray:
    """A·v, v — массив элементов длины A.cols."""
    v = np.asarray(v)
    if v.shape[:1] != (A.cols,):
        raise DimMismatch(f"vector of length {v.shape[:1]} vs {A.rows}x{A.cols}")
    tile = tile or load_config().tile
    charge(A.rows * A.cols)
    col = v.reshape((A.cols, 1) + A.ring.elem_shape)
    return A.ring.matmul(A.data, col, tile).reshape((A.rows,) + A.ring.elem_shape)


def vecmat(v: np.ndarray, A: Matrix, tile: int | None = None) -> np.ndarray:
    """vᵀ·A."""
    v = np.asarray(v)
    if v.shape[:1] != (A.rows,):
        raise DimMismatch(f"vector of length {v.shape[:1]} vs {A.rows}x{A.cols}")
    tile = tile or load_config().tile
    charge(A.rows * A.cols)
    row = v.reshape((1, A.rows) + A.ring.elem_shape)
    return A.ring.matmul(row, A.data, tile).reshape((A.cols,) + A.ring.elem_shape)


def dot(ring, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Скалярное произведение двух векторов."""
    n = x.shape[0]
    charge(n)
    row = np.asarray(x).reshape((1, n) + ring.elem_shape)
    col = np.asarray(y).reshape((n, 1) + ring.elem_shape)
    return ring.matmul(row, col, n or 1).reshape(ring.elem_shape)


# ── разреженность ───────────────────────────────────────────────────────────
@dataclass(frozen=True)
class WitnessLine:
    axis: Literal["Row", "Col"]
    index: int
    nnz: int


@dataclass(frozen=True)
class SparsityReport:
    nnz: int
    witness_line: WitnessLine | None = None


def nnz(M: Matrix) -> SparsityReport:
    return SparsityReport(int(M.ring.nonzero_mask(M.data).sum()))


def sparse_line_witness(M: Matrix, t: int) -> SparsityReport:
    """Ненулевая строка или столбец с не более ⌊√t⌋ ненулями.

    Строки просматриваются раньше столбцов, индексы по возрастанию.
    """
    mask = M.ring.nonzero_mask(M.data)
    total = int(mask.sum())
    if total == 0:
        raise NoWitness("matrix is zero, no non-zero line exists")
    limit = isqrt(max(t, 0))
    for axis, counts in (("Row", mask.sum(axis=1)), ("Col", mask.sum(axis=0))):
        for index, count in enumerate(counts.tolist()):
            if 0 < count <= limit:
                return SparsityReport(total, WitnessLine(axis, index, int(count)))
    raise NoWitness(f"no non-zero line with at most {limit} entries (‖M‖₀ = {total} > t = {t}?)")
