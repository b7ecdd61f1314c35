# ring/arith.py — векторная арифметика по модулю p и над ℤ на numpy
# -----------------------------------------------------------------
from __future__ import annotations

import numpy as np

from errors import MagnitudeOverflow

INT64_LIMIT = 2 ** 63
# 127-битное знаковое окно для целочисленных вычислений верификаторов
INT127_LIMIT = 2 ** 126
# p² < 2^62 — произведения остатков влезают в int64
SMALL_MODULUS = 2 ** 31


def max_abs(arr: np.ndarray) -> int:
    if arr.size == 0:
        return 0
    return int(np.abs(arr).max())


def as_int_array(arr: np.ndarray) -> np.ndarray:
    """int64, если влезает, иначе object (Python int)."""
    if arr.dtype == object:
        if max_abs(arr) < INT64_LIMIT:
            return arr.astype(np.int64)
        return arr
    return arr.astype(np.int64, copy=False)


def check_int127(arr: np.ndarray) -> np.ndarray:
    bound = max_abs(arr)
    if bound >= INT127_LIMIT:
        raise MagnitudeOverflow(f"intermediate magnitude 2^{bound.bit_length() - 1} exceeds 127-bit window")
    return arr


def mulmod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Поэлементное a·b mod p для канонических остатков."""
    if p < SMALL_MODULUS:
        return (np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)) % p
    prod = (np.asarray(a).astype(object) * np.asarray(b).astype(object)) % p
    return np.asarray(prod).astype(np.int64)


def _tile_for(p: int, tile: int) -> int:
    # остаток (< p) плюс tile произведений (< (p−1)²) обязаны влезть в int64
    per_step = (p - 1) ** 2
    if per_step == 0:
        return tile
    fit = (INT64_LIMIT - 1 - p) // per_step
    return min(tile, fit)


def matmul_mod(X: np.ndarray, Y: np.ndarray, p: int, tile: int) -> np.ndarray:
    """Блочное X·Y mod p; X (m×K), Y (K×n), остатки в [0, p)."""
    m, K = X.shape
    n = Y.shape[1]
    step = _tile_for(p, tile)
    if step < 1:
        out = (X.astype(object) @ Y.astype(object)) % p
        return np.asarray(out).astype(np.int64).reshape(m, n)
    out = np.zeros((m, n), dtype=np.int64)
    X = X.astype(np.int64, copy=False)
    Y = Y.astype(np.int64, copy=False)
    for k0 in range(0, K, step):
        out += X[:, k0:k0 + step] @ Y[k0:k0 + step, :]
        out %= p
    return out


def matmul_int(X: np.ndarray, Y: np.ndarray, tile: int) -> np.ndarray:
    """Точное X·Y над ℤ с контролем 127-битного окна."""
    m, K = X.shape
    n = Y.shape[1]
    bound = K * max_abs(X) * max_abs(Y)
    if bound >= INT127_LIMIT:
        raise MagnitudeOverflow(f"product bound {bound} exceeds 127-bit window")
    if bound < INT64_LIMIT:
        out = np.zeros((m, n), dtype=np.int64)
        X = X.astype(np.int64, copy=False)
        Y = Y.astype(np.int64, copy=False)
    else:
        out = np.zeros((m, n), dtype=object)
        X = X.astype(object)
        Y = Y.astype(object)
    for k0 in range(0, K, tile):
        out += X[:, k0:k0 + tile] @ Y[k0:k0 + tile, :]
    return as_int_array(out)


def add_int(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if max_abs(a) + max_abs(b) < INT64_LIMIT:
        return np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)
    return check_int127(as_int_array(np.asarray(a).astype(object) + np.asarray(b).astype(object)))


def mul_int(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if max_abs(a) * max_abs(b) < INT64_LIMIT:
        return np.asarray(a, dtype=np.int64) * np.asarray(b, dtype=np.int64)
    return check_int127(as_int_array(np.asarray(a).astype(object) * np.asarray(b).astype(object)))
