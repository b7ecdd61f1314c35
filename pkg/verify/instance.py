# verify/instance.py — входные экземпляры и вердикты
# --------------------------------------------------
from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Union

import numpy as np

from errors import DimMismatch, InvalidParameter, RingMismatch
from matrix import Matrix, op_meter
from ring import IntRing, RingSpec

logger = logging.getLogger(__name__)


def _check_operand(M: Matrix, n: int, ring: RingSpec, name: str) -> None:
    if M.ring != ring:
        raise RingMismatch(f"{name} is over {M.ring.token}, expected {ring.token}")
    if M.shape != (n, n):
        raise DimMismatch(f"{name} is {M.rows}x{M.cols}, expected {n}x{n}")


# ── экземпляры ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Instance:
    """(A, B, C) с необязательным обещанием ‖AB − C‖₀ ≤ promise_t.

    C = None — экземпляр AllZeroes (C = 0).
    Для int:M ограничение |x| ≤ M действует на A и B; C — заявленное произведение.
    """

    A: Matrix
    B: Matrix
    C: Matrix | None = None
    promise_t: int | None = None

    def __post_init__(self) -> None:
        n = self.A.rows
        _check_operand(self.A, n, self.ring, "A")
        _check_operand(self.B, n, self.ring, "B")
        if self.C is not None:
            _check_operand(self.C, n, self.ring, "C")
        if isinstance(self.ring, IntRing):
            for name, M in (("A", self.A), ("B", self.B)):
                if not self.ring.in_bound(M.data):
                    raise RingMismatch(f"{name} has entries outside [-{self.ring.M}, {self.ring.M}]")
        if self.promise_t is not None and not 0 <= self.promise_t <= n * n:
            raise InvalidParameter(f"promise {self.promise_t} outside 0..{n * n}")

    @property
    def ring(self) -> RingSpec:
        return self.A.ring

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def is_allzeroes(self) -> bool:
        return self.C is None

    @property
    def target(self) -> Matrix:
        return self.C if self.C is not None else Matrix.zeros(self.ring, self.n)


@dataclass(frozen=True)
class KInstance:
    """A_1 … A_k и (для kMMV) C; без C — экземпляр kAZ."""

    mats: tuple[Matrix, ...]
    C: Matrix | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "mats", tuple(self.mats))
        if len(self.mats) < 2:
            raise InvalidParameter(f"k-instances need k >= 2 factors, got {len(self.mats)}")
        n = self.mats[0].rows
        ring = self.mats[0].ring
        for i, M in enumerate(self.mats, start=1):
            _check_operand(M, n, ring, f"A{i}")
        if self.C is not None:
            _check_operand(self.C, n, ring, "C")

    @property
    def ring(self) -> RingSpec:
        return self.mats[0].ring

    @property
    def n(self) -> int:
        return self.mats[0].rows

    @property
    def k(self) -> int:
        return len(self.mats)

    @property
    def target(self) -> Matrix:
        return self.C if self.C is not None else Matrix.zeros(self.ring, self.n)


# ── вердикты ────────────────────────────────────────────────────────────────
class Answer(str, Enum):
    EQUAL = "Equal"
    NOT_EQUAL = "NotEqual"


class Side(str, Enum):
    DIRECT = "Direct"
    TRANSPOSE = "Transpose"


@dataclass(frozen=True)
class EntryWitness:
    i: int
    j: int


@dataclass(frozen=True, eq=False)
class TestVectorWitness:
    """(A(Bv) − Cv)[index] ≠ 0 (или (Bᵀ(Aᵀv) − Cᵀv)[index] для Transpose) в кольце ring."""

    __test__ = False

    vector: np.ndarray
    index: int
    ring: RingSpec
    side: Side = Side.DIRECT


@dataclass(frozen=True, eq=False)
class ParityRowWitness:
    """Элемент (row, col) матрицы H(AB − C) либо H(AB − C)ᵀ; parity — строка H."""

    side: Side
    row: int
    col: int
    parity: np.ndarray
    ring: RingSpec


Witness = Union[EntryWitness, TestVectorWitness, ParityRowWitness]


@dataclass(frozen=True)
class RunStats:
    random_bits: int = 0
    elem_ops: int = 0
    wall_nanos: int = 0


@dataclass(frozen=True)
class Verdict:
    alg: str
    answer: Answer
    witness: Witness | None = None
    stats: RunStats = field(default_factory=RunStats)

    @property
    def equal(self) -> bool:
        return self.answer is Answer.EQUAL


class Run:
    """Учёт одного запуска верификатора: время, умножения, случайные биты."""

    def __init__(self, alg: str, n: int, src=None) -> None:
        self.alg = alg
        self.n = n
        self.src = src
        self._bits0 = src.meter if src is not None else 0
        self._start = time.perf_counter_ns()
        self._meter = None

    def verdict(self, equal: bool, witness: Witness | None = None) -> Verdict:
        stats = RunStats(
            random_bits=(self.src.meter - self._bits0) if self.src is not None else 0,
            elem_ops=self._meter.count if self._meter is not None else 0,
            wall_nanos=time.perf_counter_ns() - self._start,
        )
        answer = Answer.EQUAL if equal else Answer.NOT_EQUAL
        logger.debug("%s n=%d → %s (bits=%d, ops=%d)", self.alg, self.n, answer.value, stats.random_bits, stats.elem_ops)
        return Verdict(self.alg, answer, witness, stats)


@contextmanager
def running(alg: str, n: int, src=None) -> Iterator[Run]:
    run = Run(alg, n, src)
    with op_meter() as meter:
        run._meter = meter
        yield run
