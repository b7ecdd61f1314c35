# verify/baselines.py — точная проверка и известные верификаторы
# -------------------------------------------------------------
"""Точное умножение, Freivalds, Kimbrel–Sinha, Korec–Wiedermann,
геометрическая прогрессия (наивная поточечная версия) и MPS.

Порядок умножения везде A·(B·v): произведение AB не строится.
"""
from __future__ import annotations

import logging

import numpy as np

from config import load_config
from errors import CapExceeded, FieldTooSmall, InvalidParameter, MagnitudeOverflow, RingMismatch
from matrix import Matrix, dot, matmul, matvec, nnz
from matrix.ops import charge
from ring import IntRing, PrimeField, RingSpec, element_of_order_at_least, field_generator, find_prime_in
from ring.arith import max_abs
from ring.primes import PRIME_LIMIT
from verify.bits import BitSource
from verify.instance import EntryWitness, Instance, KInstance, Side, TestVectorWitness, Verdict, running
from verify.witness import lift_instance

logger = logging.getLogger(__name__)


def _first_nonzero(ring: RingSpec, arr: np.ndarray) -> int | None:
    hits = np.flatnonzero(ring.nonzero_mask(arr))
    return int(hits[0]) if hits.size else None


def _residual(A: Matrix, B: Matrix, C: Matrix, v: np.ndarray) -> np.ndarray:
    """A(Bv) − Cv."""
    ring = A.ring
    return ring.sub(matvec(A, matvec(B, v)), matvec(C, v))


def powers(ring: RingSpec, base, count: int) -> np.ndarray:
    """(1, base, base², …, base^{count−1})."""
    if isinstance(ring, PrimeField):
        b, p = int(base) % ring.p, ring.p
        out, acc = [], 1
        for _ in range(count):
            out.append(acc)
            acc = acc * b % p
        return np.array(out, dtype=np.int64)
    out = ring.zeros((count,))
    acc = ring.from_ints(1)
    for i in range(count):
        out[i] = acc
        acc = ring.mul(acc, base)
    return out


def int_bounds(inst: Instance) -> tuple[int, int, int]:
    """max|A|, max|B|, max|C|."""
    return max_abs(inst.A.data), max_abs(inst.B.data), max_abs(inst.target.data)


# ── точная проверка ─────────────────────────────────────────────────────────
def verify_exact(inst: Instance) -> Verdict:
    """Вычислить AB и сравнить с C поэлементно."""
    with running("exact", inst.n) as run:
        diff = matmul(inst.A, inst.B) - inst.target
        hit = _first_nonzero(inst.ring, diff.data.reshape((-1,) + inst.ring.elem_shape))
        if hit is None:
            return run.verdict(True)
        return run.verdict(False, EntryWitness(*divmod(hit, inst.n)))


def verify_k_exact(kinst: KInstance) -> Verdict:
    """∏ A_i = C (для kAZ — = 0), слева направо."""
    with running("k-exact", kinst.n) as run:
        product = kinst.mats[0]
        for M in kinst.mats[1:]:
            product = matmul(product, M)
        diff = product - kinst.target
        hit = _first_nonzero(kinst.ring, diff.data.reshape((-1,) + kinst.ring.elem_shape))
        if hit is None:
            return run.verdict(True)
        return run.verdict(False, EntryWitness(*divmod(hit, kinst.n)))


def mps_decide(A: Matrix, B: Matrix, r: int) -> bool:
    """‖AB‖₀ ≤ r."""
    return nnz(matmul(A, B)).nnz <= r


# ── Freivalds ───────────────────────────────────────────────────────────────
def verify_freivalds(inst: Instance, rounds: int, src: BitSource) -> Verdict:
    """x ∈ {0,1}ⁿ на раунд; A(Bx) ≠ Cx — сразу NotEqual."""
    if rounds < 1:
        raise InvalidParameter(f"rounds must be ≥ 1, got {rounds}")
    ring, n = inst.ring, inst.n
    C = inst.target
    with running("freivalds", n, src) as run:
        for _ in range(rounds):
            x = ring.from_ints(np.array(src.bit_vector(n), dtype=np.int64))
            hit = _first_nonzero(ring, _residual(inst.A, inst.B, C, x))
            if hit is not None:
                return run.verdict(False, TestVectorWitness(x, hit, ring))
        return run.verdict(True)


def verify_freivalds_k(kinst: KInstance, rounds: int, src: BitSource) -> Verdict:
    """Freivalds для произведения k матриц: A_1(A_2(…(A_k x)))."""
    if rounds < 1:
        raise InvalidParameter(f"rounds must be ≥ 1, got {rounds}")
    ring, n = kinst.ring, kinst.n
    with running("freivalds-k", n, src) as run:
        for _ in range(rounds):
            x = ring.from_ints(np.array(src.bit_vector(n), dtype=np.int64))
            y = x
            for M in reversed(kinst.mats):
                y = matvec(M, y)
            hit = _first_nonzero(ring, ring.sub(y, matvec(kinst.target, x)))
            if hit is not None:
                return run.verdict(False, TestVectorWitness(x, hit, ring))
        return run.verdict(True)


# ── Kimbrel–Sinha ───────────────────────────────────────────────────────────
def verify_kimbrel_sinha(inst: Instance, src: BitSource) -> Verdict:
    """α ∈ {1..2n}, v = (1, α, …, α^{n−1}) mod q, 2n ≤ q ≤ 4n."""
    if not isinstance(inst.ring, IntRing):
        raise RingMismatch(f"Kimbrel–Sinha verifies integer instances, got {inst.ring.token}")
    n = inst.n
    q = find_prime_in(max(2, 2 * n), max(2, 4 * n))
    field = PrimeField(q)
    with running("kimbrel-sinha", n, src) as run:
        alpha = src.uniform(1, 2 * n)
        v = powers(field, alpha, n)
        A, B, C = lift_instance(inst, field)
        hit = _first_nonzero(field, _residual(A, B, C, v))
        if hit is not None:
            return run.verdict(False, TestVectorWitness(v, hit, field))
        return run.verdict(True)


# ── Korec–Wiedermann ────────────────────────────────────────────────────────
def korec_wiedermann_alpha(inst: Instance) -> int:
    """Строго больше границы Коши для строк AB − C (коэффициенты ≤ n·μ_A·μ_B + μ_C)."""
    mu_a, mu_b, mu_c = int_bounds(inst)
    return inst.n * mu_a * mu_b + mu_c + 1


def verify_korec_wiedermann(inst: Instance, cap: int | None = None) -> Verdict:
    """Детерминированно: v = (1, α, …, α^{n−1}) в длинной арифметике."""
    if not isinstance(inst.ring, IntRing):
        raise RingMismatch(f"Korec–Wiedermann verifies integer instances, got {inst.ring.token}")
    n = inst.n
    cap = cap if cap is not None else load_config().kw_cap
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the Korec–Wiedermann cap {cap}")
    with running("korec-wiedermann", n) as run:
        alpha = korec_wiedermann_alpha(inst)
        v = np.array([alpha ** i for i in range(n)], dtype=object)
        A = inst.A.data.astype(object)
        B = inst.B.data.astype(object)
        C = inst.target.data.astype(object)
        charge(3 * n * n)
        residual = A.dot(B.dot(v)) - C.dot(v)
        rows = np.flatnonzero(residual != 0)
        if rows.size == 0:
            return run.verdict(True)
        # ненулевая строка многочленов — ищем ненулевой элемент AB − C в ней
        i = int(rows[0])
        charge(n * n)
        row = A[i].dot(B) - C[i]
        j = int(np.flatnonzero(row != 0)[0])
        return run.verdict(False, EntryWitness(i, j))


# ── геометрическая прогрессия ───────────────────────────────────────────────
def geometric_field(inst: Instance) -> RingSpec:
    """Поле, где проверяются g(α^i): Z_q для ℤ, само поле иначе (|F| > n²)."""
    n = inst.n
    if isinstance(inst.ring, IntRing):
        mu_a, mu_b, mu_c = int_bounds(inst)
        bound = n * mu_a * mu_b + mu_c
        lo = max(n * n, 2 * bound) + 1
        if lo >= PRIME_LIMIT:
            raise MagnitudeOverflow(f"evaluation prime must exceed {lo}, beyond the 2^61 modulus limit")
        return PrimeField(find_prime_in(lo, min(2 * lo, PRIME_LIMIT - 1)))
    if inst.ring.size <= n * n:
        raise FieldTooSmall(f"{inst.ring.token} needs more than n² = {n * n} elements")
    return inst.ring


def verify_geometric(inst: Instance, t: int) -> Verdict:
    """g(z) = Σ (AB − C)_{rc} z^{r + nc}; проверка g(α^i) = 0 для i < t."""
    if t < 1:
        raise InvalidParameter(f"t must be ≥ 1, got {t}")
    n = inst.n
    field = geometric_field(inst)
    if isinstance(field, PrimeField):
        alpha = element_of_order_at_least(field, n * n)
    else:
        alpha = field_generator(field)
    A, B, C = lift_instance(inst, field)
    with running("geometric", n) as run:
        beta = field.from_ints(1)
        for _ in range(t):
            x = powers(field, beta, n)
            y = powers(field, field.pow(beta, n), n)
            residual = _residual(A, B, C, y)
            if field.nonzero_mask(dot(field, x, residual)):
                hit = _first_nonzero(field, residual)
                return run.verdict(False, TestVectorWitness(y, hit, field, Side.DIRECT))
            beta = field.mul(beta, alpha)
        return run.verdict(True)
