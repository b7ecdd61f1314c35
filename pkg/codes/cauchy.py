# codes/cauchy.py — сверхрегулярные матрицы Коши S[j, i] = 1 / (x_j − y_i)
# -------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from errors import DegeneratePoints, FieldTooSmall, InvalidParameter
from matrix import Matrix
from ring import PrimeField, RingSpec


@dataclass(frozen=True)
class CauchySpec:
    """Канонические точки: xs — первые n элементов поля, ys — следующие k."""

    field: RingSpec
    n: int
    k: int

    def __post_init__(self) -> None:
        if not self.field.is_field:
            raise InvalidParameter(f"Cauchy matrices need a field, not {self.field.token}")
        if self.n < 1 or self.k < 1:
            raise InvalidParameter(f"need n, k >= 1, got n={self.n}, k={self.k}")
        # условие различимости точек: n + k ≤ |F|
        if self.n + self.k > self.field.size:
            raise FieldTooSmall(f"{self.field.token}: n + k = {self.n + self.k} > {self.field.size}")

    @property
    def xs(self) -> np.ndarray:
        return self.field.elements(self.n)

    @property
    def ys(self) -> np.ndarray:
        return self.field.elements(self.n + self.k)[self.n:]


def batch_inverse(field: RingSpec, values: np.ndarray) -> np.ndarray:
    """Обратные к набору ненулевых элементов: одно обращение и 3(n−1) умножений."""
    count = values.shape[0]
    if count == 0:
        return values.copy()
    if isinstance(field, PrimeField):
        p = field.p
        vals = [int(v) for v in values]
        prefix = [1] * count
        acc = 1
        for i, v in enumerate(vals):
            prefix[i] = acc
            acc = acc * v % p
        if acc == 0:
            raise DegeneratePoints("zero denominator")
        inv = pow(acc, -1, p)
        out = [0] * count
        for i in range(count - 1, -1, -1):
            out[i] = inv * prefix[i] % p
            inv = inv * vals[i] % p
        return np.array(out, dtype=np.int64)
    prefix = np.empty_like(values)
    acc = field.from_ints(1)
    for i in range(count):
        prefix[i] = acc
        acc = field.mul(acc, values[i])
    if not field.nonzero_mask(acc):
        raise DegeneratePoints("zero denominator")
    inv = field.inv(acc)
    out = np.empty_like(values)
    for i in range(count - 1, -1, -1):
        out[i] = field.mul(inv, prefix[i])
        inv = field.mul(inv, values[i])
    return out


def cauchy_column(field: RingSpec, n: int, k: int, i: int) -> np.ndarray:
    """i-й (с единицы) столбец n×k матрицы Коши за O(n) операций."""
    spec = CauchySpec(field, n, k)
    if not 1 <= i <= k:
        raise InvalidParameter(f"column index {i} outside 1..{k}")
    y = field.elements(n + i)[n + i - 1]
    diffs = field.sub(spec.xs, y)
    return batch_inverse(field, diffs)


def cauchy_matrix(field: RingSpec, n: int, k: int) -> Matrix:
    columns = [cauchy_column(field, n, k, i) for i in range(1, k + 1)]
    return Matrix(field, np.stack(columns, axis=1))


def cauchy_det_closed_form(field: RingSpec, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """det[1/(x_i − y_j)] = ∏_{i<j}(x_j − x_i)(y_i − y_j) / ∏_{i,j}(x_i − y_j)."""
    xs = np.asarray(xs)
    ys = np.asarray(ys)
    m = xs.shape[0]
    if ys.shape[0] != m:
        raise DegeneratePoints(f"|xs| = {m} but |ys| = {ys.shape[0]}")
    points = [field.to_python(v) for v in np.concatenate([xs, ys])]
    if len(set(points)) != len(points):
        raise DegeneratePoints("Cauchy points must be pairwise distinct")
    num = field.from_ints(1)
    for i in range(m):
        for j in range(i + 1, m):
            num = field.mul(num, field.mul(field.sub(xs[j], xs[i]), field.sub(ys[i], ys[j])))
    den = field.from_ints(1)
    for i in range(m):
        for j in range(m):
            den = field.mul(den, field.sub(xs[i], ys[j]))
    return field.mul(num, field.inv(den))
