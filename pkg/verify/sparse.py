# verify/sparse.py — верификаторы для ‖AB − C‖₀ ≤ t
# --------------------------------------------------
"""Детерминированный (проверочная матрица MDS-кода) и рандомизированный
(столбец матрицы Коши, номер выбирается log₂k′ битами) верификаторы.

Над ℤ вся арифметика точная: проверочные строки и столбцы Коши берутся
над Z_p как неотрицательные целые, а произведения считаются в int:M.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import ceil, isqrt

import numpy as np

from codes import cauchy_column, vandermonde_parity_check
from errors import InvalidParameter, MagnitudeOverflow
from matrix import Matrix, matmul, matvec, vecmat
from ring import IntRing, PrimeField, RingSpec, find_prime_in, lift_ring
from ring.arith import INT127_LIMIT, max_abs
from verify.bits import BitSource
from verify.instance import Instance, ParityRowWitness, Side, TestVectorWitness, Verdict, running
from verify.witness import lift_instance

logger = logging.getLogger(__name__)


def ceil_sqrt(x: int) -> int:
    r = isqrt(x)
    return r if r * r >= x else r + 1


def _check_promise(inst: Instance, t: int) -> None:
    if not 0 <= t <= inst.n * inst.n:
        raise InvalidParameter(f"t = {t} outside 0..{inst.n * inst.n}")


def check_admissible(inst: Instance, weight: int) -> None:
    """n·w·(n·M² + M_C) < 2^126, M_C = max(M, max|C|); w — наибольший множитель проверки."""
    if not isinstance(inst.ring, IntRing):
        return
    n, M = inst.n, inst.ring.M
    m_c = max(M, max_abs(inst.target.data))
    if n * weight * (n * M * M + m_c) >= INT127_LIMIT:
        raise MagnitudeOverflow(
            f"int:{M} instance with n = {n} can overflow 127-bit intermediates (check weight {weight})"
        )


def _working(inst: Instance, field: RingSpec) -> tuple[RingSpec, Matrix, Matrix, Matrix]:
    """Кольцо вычислений и A, B, C в нём: ℤ остаётся ℤ, поле поднимается в field."""
    if isinstance(inst.ring, IntRing):
        return inst.ring, inst.A, inst.B, inst.target
    return (field, *lift_instance(inst, field))


def _first_nonzero_2d(ring: RingSpec, M: Matrix) -> tuple[int, int] | None:
    hits = np.argwhere(ring.nonzero_mask(M.data))
    return (int(hits[0][0]), int(hits[0][1])) if hits.size else None


# ── детерминированный ───────────────────────────────────────────────────────
def det_sparse_field(inst: Instance) -> RingSpec:
    n = inst.n
    if isinstance(inst.ring, IntRing):
        return PrimeField(find_prime_in(max(2, n), max(2, 2 * n)))
    return lift_ring(inst.ring, n)


def verify_det_sparse(inst: Instance, t: int) -> Verdict:
    """H(AB − C) и H(AB − C)ᵀ при H — ⌈√t⌉×n проверочной матрице MDS-кода.

    Столбец x разности с 0 < ‖x‖₀ ≤ √t даёт Hx ≠ 0; при ‖AB − C‖₀ ≤ t такой
    столбец (или строка) существует.
    """
    _check_promise(inst, t)
    n = inst.n
    field = det_sparse_field(inst)
    check_admissible(inst, field.size)
    rows = max(1, ceil_sqrt(t))
    parity = vandermonde_parity_check(field, rows, n)
    ring, A, B, C = _working(inst, field)
    H = Matrix(ring, parity.H.data)
    logger.debug("det-sparse n=%d t=%d: %d parity rows over %s", n, t, rows, field.token)
    with running("det-sparse", n) as run:
        direct = matmul(matmul(H, A), B) - matmul(H, C)
        hit = _first_nonzero_2d(ring, direct)
        if hit is not None:
            r, c = hit
            return run.verdict(False, ParityRowWitness(Side.DIRECT, r, c, H.data[r].copy(), ring))
        transpose = matmul(matmul(H, B.T), A.T) - matmul(H, C.T)
        hit = _first_nonzero_2d(ring, transpose)
        if hit is not None:
            r, c = hit
            return run.verdict(False, ParityRowWitness(Side.TRANSPOSE, r, c, H.data[r].copy(), ring))
        return run.verdict(True)


# ── рандомизированный ───────────────────────────────────────────────────────
def as_eps(eps) -> Fraction:
    """float / str / Fraction → Fraction; 0 < ε ≤ 1/2."""
    value = Fraction(str(eps)) if isinstance(eps, float) else Fraction(eps)
    if not 0 < value <= Fraction(1, 2):
        raise InvalidParameter(f"eps = {eps} outside (0, 1/2]")
    return value


def cauchy_width(t: int, eps: Fraction) -> int:
    """k′ — степень двойки ≥ ⌈√t / ε⌉ (при t = 0 — 1)."""
    if t == 0:
        return 1
    # k ≥ √t/ε ⇔ k² ≥ t/ε²
    k = ceil_sqrt(ceil(Fraction(t) / (eps * eps)))
    return 1 << (k - 1).bit_length()


def rand_sparse_field(inst: Instance, width: int) -> RingSpec:
    need = width + inst.n
    if isinstance(inst.ring, IntRing):
        return PrimeField(find_prime_in(need, 2 * need))
    return lift_ring(inst.ring, need)


def verify_rand_sparse(inst: Instance, t: int, eps, src: BitSource) -> Verdict:
    """Один столбец s матрицы Коши n×k′: A(Bs) против Cs и Bᵀ(Aᵀs) против Cᵀs.

    Расходует ровно log₂k′ случайных бит.
    """
    _check_promise(inst, t)
    eps = as_eps(eps)
    n = inst.n
    if eps < Fraction(1, n):
        logger.debug("eps = %s below 1/n = 1/%d, k' grows past n", eps, n)
    width = cauchy_width(t, eps)
    field = rand_sparse_field(inst, width)
    check_admissible(inst, field.size)
    ring, A, B, C = _working(inst, field)
    with running("rand-sparse", n, src) as run:
        index = 1 + src.bits(width.bit_length() - 1)
        s = cauchy_column(field, n, width, index)
        direct = ring.sub(matvec(A, matvec(B, s)), matvec(C, s))
        hits = np.flatnonzero(ring.nonzero_mask(direct))
        if hits.size:
            return run.verdict(False, TestVectorWitness(s, int(hits[0]), ring, Side.DIRECT))
        transpose = ring.sub(vecmat(vecmat(s, A), B), vecmat(s, C))
        hits = np.flatnonzero(ring.nonzero_mask(transpose))
        if hits.size:
            return run.verdict(False, TestVectorWitness(s, int(hits[0]), ring, Side.TRANSPOSE))
        return run.verdict(True)
