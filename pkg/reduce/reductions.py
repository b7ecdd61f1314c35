# reduce/reductions.py — O(n²)-сведения между вариантами MMV
# -----------------------------------------------------------
"""Каждое сведение — чистая функция: строит новые блочные матрицы,
входной экземпляр не меняется, ответ сохраняется.

Над int:M выходные блоки могут содержать C (или −C), поэтому граница M
выходного кольца расширяется до наибольшего модуля записанных элементов.
"""
from __future__ import annotations

import logging

from errors import DimMismatch, InvalidParameter, NotAllZeroesForm
from matrix import Matrix, dot
from matrix.ops import charge
from ring import IntRing, RingSpec
from ring.arith import max_abs
from verify.instance import Instance, KInstance

logger = logging.getLogger(__name__)


def _widen(ring: RingSpec, *mats: Matrix) -> RingSpec:
    """int:M → int:M′, M′ ≥ max|элементов|; поля не меняются."""
    if not isinstance(ring, IntRing):
        return ring
    bound = max([ring.M, 1] + [max_abs(M.data) for M in mats])
    if bound == ring.M:
        return ring
    logger.debug("widened int:%d to int:%d for reduction output", ring.M, bound)
    return IntRing(bound)


def _over(ring: RingSpec, M: Matrix) -> Matrix:
    return M if M.ring == ring else Matrix(ring, M.data)


def _blocks(ring: RingSpec, layout: list[list[Matrix | int]], n: int) -> Matrix:
    """Блочная матрица; 0 и 1 в layout — нулевой и единичный блоки n×n."""
    zero, one = Matrix.zeros(ring, n), Matrix.identity(ring, n)
    cells = [[_over(ring, b) if isinstance(b, Matrix) else (one if b else zero) for b in row] for row in layout]
    out = Matrix.block(ring, cells)
    # сборка блоков: одна запись на элемент результата
    charge(out.rows * out.cols)
    return out


# ── MMV ↔ AllZeroes ─────────────────────────────────────────────────────────
def mmv_to_allzeroes(inst: Instance) -> Instance:
    """A′ = [[A, −I], [0, 0]], B′ = [[B, 0], [C, 0]]; A′B′ = [[AB − C, 0], [0, 0]]."""
    n, C = inst.n, inst.target
    ring = _widen(inst.ring, C)
    minus_one = Matrix(ring, ring.neg(ring.identity(n)))
    A2 = _blocks(ring, [[inst.A, minus_one], [0, 0]], n)
    B2 = _blocks(ring, [[inst.B, 0], [C, 0]], n)
    return Instance(A2, B2, None, inst.promise_t)


def allzeroes_to_mmv(inst: Instance) -> Instance:
    """AllZeroes — частный случай MMV с явным C = 0."""
    return Instance(inst.A, inst.B, Matrix.zeros(inst.ring, inst.n), inst.promise_t)


# ── AllZeroes → обращение ───────────────────────────────────────────────────
def allzeroes_to_inverse(inst: Instance) -> Instance:
    """A′ = [[I, A, 0], [0, I, B], [0, 0, I]], B′ = [[I, −A, 0], [0, I, −B], [0, 0, I]].

    A′B′ = I₃ₙ ⟺ AB = 0. Результат — экземпляр с C = I₃ₙ.
    """
    if inst.C is not None and not inst.C.is_zero():
        raise NotAllZeroesForm("allzeroes_to_inverse expects C = 0")
    n, ring = inst.n, inst.ring
    A2 = _blocks(ring, [[1, inst.A, 0], [0, 1, inst.B], [0, 0, 1]], n)
    B2 = _blocks(ring, [[1, -inst.A, 0], [0, 1, -inst.B], [0, 0, 1]], n)
    return Instance(A2, B2, Matrix.identity(ring, 3 * n))


def inverse_to_mmv(inst: Instance) -> Instance:
    """B = A⁻¹ ⟺ AB = I."""
    return Instance(inst.A, inst.B, Matrix.identity(inst.ring, inst.n))


# ── MMV → симметричный MMV ──────────────────────────────────────────────────
def mmv_to_symmetric(inst: Instance) -> Instance:
    """A′, B′ симметричны, A′B′ = C′ ⟺ AB = C (размер 3n)."""
    n = inst.n
    A, B, C = inst.A, inst.B, inst.target
    ring = _widen(inst.ring, C)
    A, B, C = _over(ring, A), _over(ring, B), _over(ring, C)
    I = Matrix.identity(ring, n)
    A2 = _blocks(ring, [[1, 0, A], [0, 1, -A], [A.T, -A.T, 1]], n)
    B2 = _blocks(ring, [[1, 0, B.T], [0, 1, B.T], [B, B, 1]], n)
    C2 = _blocks(
        ring,
        [
            [I + C, C, B.T + A],
            [-C, I - C, B.T - A],
            [A.T + B, -A.T + B, 1],
        ],
        n,
    )
    # C′ может выйти за M: I ± C, Bᵀ ± A
    wide = _widen(ring, C2)
    return Instance(_over(wide, A2), _over(wide, B2), _over(wide, C2))


# ── векторы: все пары ортогональны ──────────────────────────────────────────
def mcapo_to_mmv(vectors: Matrix) -> Instance:
    """Строки vectors — a_1 … a_n. Экземпляр (Aᵀ, A, diag⟨a_i, a_i⟩), A = (a_1 … a_n)."""
    if not vectors.is_square:
        raise DimMismatch(f"need n vectors of length n, got {vectors.rows} of length {vectors.cols}")
    ring = _widen(vectors.ring, vectors)
    rows = _over(ring, vectors)
    A = rows.T
    n = rows.rows
    diag = [dot(ring, rows.data[i], rows.data[i]) for i in range(n)]
    gram = ring.zeros((n, n))
    if isinstance(ring, IntRing):
        gram = gram.astype(object)
        diag = [int(v) for v in diag]
    for i, value in enumerate(diag):
        gram[i, i] = value
    if isinstance(ring, IntRing):
        gram = ring.from_ints(gram)
    return Instance(rows, A, Matrix(ring, gram))


def bcapo_to_allzeroes(left: Matrix, right: Matrix) -> Instance:
    """⟨a_i, b_j⟩ = 0 для всех i, j ⟺ AB = 0; a_i — строки left, b_j — строки right."""
    if left.shape != right.shape or not left.is_square:
        raise DimMismatch(f"need two families of n vectors of length n, got {left.shape} and {right.shape}")
    ring = _widen(left.ring, left, right)
    return Instance(_over(ring, left), _over(ring, right).T)


# ── k-произведения ──────────────────────────────────────────────────────────
def kmmv_to_kaz(kinst: KInstance) -> KInstance:
    """A′₁ = [[A₁, I], [0, 0]], A′_i = [[A_i, 0], [0, I]], A′_k = [[A_k, 0], [−C, 0]].

    ∏ A′_i = [[∏A_i − C, 0], [0, 0]]: средние блоки сохраняют единицу
    в правом нижнем углу, пока её не съест −C последнего множителя.
    """
    n, C = kinst.n, kinst.target
    ring = _widen(kinst.ring, C, *kinst.mats)
    first, *middle, last = kinst.mats
    out = [_blocks(ring, [[first, 1], [0, 0]], n)]
    out += [_blocks(ring, [[M, 0], [0, 1]], n) for M in middle]
    minus_c = Matrix(ring, ring.neg(_over(ring, C).data))
    out.append(_blocks(ring, [[last, 0], [minus_c, 0]], n))
    return KInstance(tuple(out))


def kaz_to_kmmv(kinst: KInstance) -> KInstance:
    return KInstance(kinst.mats, Matrix.zeros(kinst.ring, kinst.n))


def mmv_to_kmmv(inst: Instance, k: int) -> KInstance:
    """A · B · I · … · I = C — k множителей."""
    if k < 2:
        raise InvalidParameter(f"k must be ≥ 2, got {k}")
    pad = (Matrix.identity(inst.ring, inst.n),) * (k - 2)
    return KInstance((inst.A, inst.B, *pad), inst.target)


def kmmv_to_mmv(kinst: KInstance) -> Instance:
    """k = 2 — обычный MMV."""
    if kinst.k != 2:
        raise InvalidParameter(f"only k = 2 instances are plain MMV, got k = {kinst.k}")
    ring = _widen(kinst.ring, *kinst.mats)
    A, B = (_over(ring, M) for M in kinst.mats)
    return Instance(A, B, _over(ring, kinst.target))


# ── MPS ─────────────────────────────────────────────────────────────────────
def mmv_to_mps(inst: Instance) -> tuple[Matrix, Matrix, int]:
    """Через AllZeroes: AB = C ⟺ ‖A′B′‖₀ ≤ 0."""
    az = mmv_to_allzeroes(inst)
    return az.A, az.B, 0


# ── таблица для CLI ─────────────────────────────────────────────────────────
PROBLEMS = ("mmv", "allzeroes", "inverse", "symmetric", "mcapo", "kmmv", "kaz")

ROUTES = {
    ("mmv", "allzeroes"): mmv_to_allzeroes,
    ("allzeroes", "mmv"): allzeroes_to_mmv,
    ("allzeroes", "inverse"): allzeroes_to_inverse,
    ("inverse", "mmv"): inverse_to_mmv,
    ("mmv", "symmetric"): mmv_to_symmetric,
    ("mcapo", "mmv"): mcapo_to_mmv,
    ("kmmv", "kaz"): kmmv_to_kaz,
    ("kaz", "kmmv"): kaz_to_kmmv,
    ("kmmv", "mmv"): kmmv_to_mmv,
}


def route(source: str, target: str):
    try:
        return ROUTES[(source, target)]
    except KeyError:
        known = ", ".join(f"{a}→{b}" for a, b in ROUTES)
        raise InvalidParameter(f"no reduction {source} → {target}; known: {known}, mmv→kmmv") from None
