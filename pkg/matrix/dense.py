# matrix/dense.py — плотная матрица над RingSpec
# ----------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from errors import DimMismatch, RingMismatch
from ring import RingSpec


@dataclass(frozen=True, eq=False)
class Matrix:
    """rows × cols элементов кольца ring, данные в numpy (только чтение)."""

    ring: RingSpec
    data: np.ndarray

    def __post_init__(self) -> None:
        data = np.asarray(self.data)
        elem = self.ring.elem_shape
        if data.ndim != 2 + len(elem) or tuple(data.shape[2:]) != elem:
            raise DimMismatch(f"data of shape {data.shape} is not a matrix over {self.ring.token}")
        if not self.ring.is_canonical(data):
            raise RingMismatch(f"entries are not canonical for {self.ring.token}")
        data = data.copy()
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    # ── конструкторы ────────────────────────────────────────────────────
    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Iterable[Sequence]) -> "Matrix":
        """Из списка строк целых чисел (для GF — кортежей коэффициентов)."""
        arr = np.array([list(r) for r in rows], dtype=object)
        if ring.elem_shape:
            return cls(ring, arr.astype(np.int64))
        return cls(ring, ring.from_ints(arr))

    @classmethod
    def zeros(cls, ring: RingSpec, rows: int, cols: int | None = None) -> "Matrix":
        return cls(ring, ring.zeros((rows, rows if cols is None else cols)))

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "Matrix":
        return cls(ring, ring.identity(n))

    @classmethod
    def block(cls, ring: RingSpec, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        for row in blocks:
            for b in row:
                if b.ring != ring:
                    raise RingMismatch(f"block over {b.ring.token}, expected {ring.token}")
        rows = [np.concatenate([b.data for b in row], axis=1) for row in blocks]
        return cls(ring, np.concatenate(rows, axis=0))

    # ── свойства ────────────────────────────────────────────────────────
    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> "Matrix":
        return Matrix(self.ring, np.swapaxes(self.data, 0, 1).copy())

    def __getitem__(self, ij: tuple[int, int]):
        return self.ring.to_python(self.data[ij])

    def tolist(self) -> list[list]:
        return [[self.ring.to_python(self.data[i, j]) for j in range(self.cols)] for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not self.ring.nonzero_mask(self.data).any()

    # ── арифметика (поэлементная) ───────────────────────────────────────
    def _check(self, other: "Matrix") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"{self.ring.token} vs {other.ring.token}")
        if self.shape != other.shape:
            raise DimMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.ring, self.ring.add(self.data, other.data))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.ring, self.ring.sub(self.data, other.data))

    def __neg__(self) -> "Matrix":
        return Matrix(self.ring, self.ring.neg(self.data))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.ring, self.data.shape, self.data.tobytes() if self.data.dtype != object else str(self.tolist())))

    def __repr__(self) -> str:
        return f"Matrix({self.ring.token}, {self.rows}x{self.cols})"
