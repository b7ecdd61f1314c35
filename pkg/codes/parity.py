# codes/parity.py — проверочная матрица MDS-кода (транспонированная Вандермонда)
# -------------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from errors import FieldTooSmall, InvalidParameter
from matrix import Matrix
from ring import RingSpec


@dataclass(frozen=True)
class ParityCheck:
    """H[i, j] = x_j^i; любой ненулевой x с ‖x‖₀ ≤ rows даёт Hx ≠ 0."""

    H: Matrix
    points: np.ndarray

    @property
    def rows(self) -> int:
        return self.H.rows

    @property
    def n(self) -> int:
        return self.H.cols

    @property
    def field(self) -> RingSpec:
        return self.H.ring


def vandermonde_parity_check(field: RingSpec, rows: int, n: int) -> ParityCheck:
    if not field.is_field:
        raise InvalidParameter(f"parity checks are built over a field, not {field.token}")
    if not 1 <= rows <= n:
        raise InvalidParameter(f"need 1 <= rows <= n, got rows={rows}, n={n}")
    if n > field.size:
        raise FieldTooSmall(f"{field.token} has {field.size} elements, need {n} distinct points")
    points = field.elements(n)
    H = field.zeros((rows, n))
    power = field.from_ints(np.ones(n, dtype=np.int64))
    for i in range(rows):
        H[i] = power
        power = field.mul(power, points)
    return ParityCheck(Matrix(field, H), points)
