# harness/planted.py — генератор экземпляров с ровно s ненулями в AB − C
# ----------------------------------------------------------------------
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from errors import InvalidParameter
from matrix import Matrix, matmul
from ring import ExtField, IntRing, PrimeField, RingSpec
from verify.bits import MASK64
from verify.instance import Instance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlantedConfig:
    n: int
    ring: RingSpec
    s: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameter(f"n must be ≥ 1, got {self.n}")
        if not 0 <= self.s <= self.n * self.n:
            raise InvalidParameter(f"s = {self.s} outside 0..{self.n * self.n}")


def _uniform(rng: np.random.Generator, ring: RingSpec, shape: tuple[int, ...]) -> np.ndarray:
    if isinstance(ring, PrimeField):
        return rng.integers(0, ring.p, size=shape, dtype=np.int64)
    if isinstance(ring, ExtField):
        return rng.integers(0, ring.p, size=shape + (ring.e,), dtype=np.int64)
    if isinstance(ring, IntRing):
        return rng.integers(-ring.M, ring.M + 1, size=shape, dtype=np.int64)
    raise InvalidParameter(f"cannot sample from {ring.token}")


def _nonzero(rng: np.random.Generator, ring: RingSpec) -> np.ndarray:
    """Равномерно среди ненулевых элементов."""
    if isinstance(ring, PrimeField):
        return np.int64(rng.integers(1, ring.p))
    if isinstance(ring, IntRing):
        # [−M, M] \ {0}: 2M значений
        k = int(rng.integers(0, 2 * ring.M))
        return np.int64(k - ring.M if k < ring.M else k - ring.M + 1)
    while True:
        value = _uniform(rng, ring, ())
        if value.any():
            return value


def _positions(rng: np.random.Generator, total: int, s: int) -> list[int]:
    """Префикс длины s перестановки Фишера–Йетса."""
    perm = list(range(total))
    for i in range(s):
        j = int(rng.integers(i, total))
        perm[i], perm[j] = perm[j], perm[i]
    return perm[:s]


def gen_planted(cfg: PlantedConfig) -> Instance:
    """A, B случайны, C = AB с s возмущёнными позициями; promise_t = s."""
    ring, n = cfg.ring, cfg.n
    rng = np.random.default_rng(cfg.seed & MASK64)
    A = Matrix(ring, _uniform(rng, ring, (n, n)))
    B = Matrix(ring, _uniform(rng, ring, (n, n)))
    C = matmul(A, B).data.copy()
    if isinstance(ring, IntRing):
        C = C.astype(object)
    for pos in _positions(rng, n * n, cfg.s):
        i, j = divmod(pos, n)
        value = ring.add(C[i, j], _nonzero(rng, ring))
        C[i, j] = int(value) if isinstance(ring, IntRing) else value
    if isinstance(ring, IntRing):
        C = ring.from_ints(C)
    logger.debug("planted %s n=%d s=%d seed=%d", ring.token, n, cfg.s, cfg.seed)
    return Instance(A, B, Matrix(ring, C), promise_t=cfg.s)
