# verify/bits.py — детерминированный источник случайных бит со счётчиком
# ----------------------------------------------------------------------
from __future__ import annotations

import random

MASK64 = (1 << 64) - 1


def mix64(x: int) -> int:
    """Финализатор splitmix64 — биекция на 64-битных словах."""
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def derive_seed(seed: int, index: int) -> int:
    """Seed i-го испытания: seed ⊕ mix(i)."""
    return (seed ^ mix64(index)) & MASK64


class BitSource:
    """Один seed — один поток бит; meter растёт ровно на число выданных бит."""

    def __init__(self, seed: int) -> None:
        self.seed = seed & MASK64
        self._rng = random.Random(self.seed)
        self.counter = 0
        self.meter = 0

    def bits(self, k: int) -> int:
        if k < 0:
            raise ValueError(f"cannot draw {k} bits")
        self.counter += 1
        self.meter += k
        return self._rng.getrandbits(k) if k else 0

    def bit_vector(self, n: int) -> list[int]:
        word = self.bits(n)
        return [(word >> i) & 1 for i in range(n)]

    def uniform(self, lo: int, hi: int) -> int:
        """Равномерно из [lo, hi]: ⌈log₂(размер)⌉-битные попытки с отбраковкой."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError(f"empty range [{lo}, {hi}]")
        width = (span - 1).bit_length()
        while True:
            draw = self.bits(width)
            if draw < span:
                return lo + draw

    def __repr__(self) -> str:
        return f"BitSource(seed={self.seed}, draws={self.counter}, bits={self.meter})"
