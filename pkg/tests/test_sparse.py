# tests/test_sparse.py
import itertools
from fractions import Fraction

import numpy as np
import pytest

from conftest import inst
from errors import InvalidParameter, MagnitudeOverflow
from harness import PlantedConfig, gen_planted
from matrix import Matrix
from ring import ExtField, IntRing, PrimeField
from verify import (
    BitSource,
    Instance,
    ParityRowWitness,
    Side,
    TestVectorWitness,
    validate_witness,
    verify_det_sparse,
    verify_exact,
    verify_rand_sparse,
)
from verify.sparse import as_eps, cauchy_width, ceil_sqrt, check_admissible, det_sparse_field


def _identity(ring, n):
    I = Matrix.identity(ring, n)
    return Instance(I, I, I)


# ----------------------------------------------------------------------
# вспомогательное
# ----------------------------------------------------------------------

def test_ceil_sqrt():
    assert [ceil_sqrt(x) for x in (0, 1, 2, 4, 5, 9, 10)] == [0, 1, 2, 2, 3, 3, 4]


def test_cauchy_width_is_power_of_two():
    assert cauchy_width(16, Fraction(1, 2)) == 8
    assert cauchy_width(0, Fraction(1, 2)) == 1
    assert cauchy_width(1, Fraction(1, 2)) == 2
    assert cauchy_width(64, Fraction(1, 8)) == 64
    # √10 / (1/2) ≈ 6.32 → 7 → 8
    assert cauchy_width(10, Fraction(1, 2)) == 8


def test_as_eps():
    assert as_eps("1/4") == Fraction(1, 4)
    assert as_eps(0.125) == Fraction(1, 8)
    for bad in ("0", "3/4", -0.1):
        with pytest.raises(InvalidParameter):
            as_eps(bad)


def test_det_sparse_field():
    assert det_sparse_field(gen_planted(PlantedConfig(16, IntRing(1024)))) == PrimeField(17)
    lifted = det_sparse_field(gen_planted(PlantedConfig(16, PrimeField(7))))
    assert isinstance(lifted, ExtField) and lifted.size == 49


def test_admissibility_bound():
    n = 4
    big = IntRing(2 ** 60)
    zero = Matrix.zeros(big, n)
    with pytest.raises(MagnitudeOverflow):
        check_admissible(Instance(zero, zero, zero), 7)
    check_admissible(Instance(*[Matrix.zeros(IntRing(2 ** 20), n)] * 3), 7)


# ----------------------------------------------------------------------
# детерминированный
# ----------------------------------------------------------------------

def test_det_sparse_identity(z101, int1024):
    for ring in (z101, int1024):
        for t in (0, 1, 4, 9):
            assert verify_det_sparse(_identity(ring, 3), t).equal


def test_det_sparse_forced_witness(int1024, z7):
    for ring in (int1024, z7):
        verdict = verify_det_sparse(inst(ring, [[1]], [[1]], [[0]]), 1)
        assert not verdict.equal
        w = verdict.witness
        assert isinstance(w, ParityRowWitness)
        assert (w.side, w.row, w.col) == (Side.DIRECT, 0, 0)


@pytest.mark.parametrize("ring", [IntRing(1024), PrimeField(101), PrimeField(7), ExtField(2, 3)])
def test_det_sparse_exact_on_planted(ring):
    for seed in range(40):
        s = seed % 5
        planted = gen_planted(PlantedConfig(8, ring, s=s, seed=seed))
        for t in (s, min(64, s + 3)):
            verdict = verify_det_sparse(planted, t)
            assert verdict.equal == (s == 0)
            assert validate_witness(planted, verdict)


def test_det_sparse_n16_t4(int1024):
    for seed in range(25):
        planted = gen_planted(PlantedConfig(16, int1024, s=4, seed=seed))
        assert not verify_det_sparse(planted, 4).equal
        clean = gen_planted(PlantedConfig(16, int1024, s=0, seed=seed))
        assert verify_det_sparse(clean, 4).equal


def test_det_sparse_uses_transpose_side(z101):
    # AB − C = столбец (1, −2, 1, 0) в ядре H = [[1,1,1,1],[0,1,2,3]]
    n = 4
    zero = [[0] * n for _ in range(n)]
    C = [[0] * n for _ in range(n)]
    C[0][0], C[1][0], C[2][0] = 100, 2, 100
    instance = inst(z101, zero, zero, C)
    verdict = verify_det_sparse(instance, 4)
    assert not verdict.equal
    assert verdict.witness.side is Side.TRANSPOSE
    assert validate_witness(instance, verdict)


def test_det_sparse_is_deterministic(int1024):
    planted = gen_planted(PlantedConfig(10, int1024, s=3, seed=77))
    first, second = verify_det_sparse(planted, 3), verify_det_sparse(planted, 3)
    assert (first.witness.side, first.witness.row, first.witness.col) == (
        second.witness.side,
        second.witness.row,
        second.witness.col,
    )
    assert first.stats.random_bits == 0


def test_det_sparse_rejects_bad_promise(z7):
    with pytest.raises(InvalidParameter):
        verify_det_sparse(_identity(z7, 2), 5)


# ----------------------------------------------------------------------
# рандомизированный
# ----------------------------------------------------------------------

def test_rand_sparse_equal_for_every_seed(z101, int1024):
    for ring in (z101, int1024):
        planted = gen_planted(PlantedConfig(6, ring, s=0, seed=1))
        for seed in range(30):
            assert verify_rand_sparse(planted, 6, Fraction(1, 4), BitSource(seed)).equal


def test_rand_sparse_bit_count(int1024):
    planted = gen_planted(PlantedConfig(16, int1024, s=0, seed=0))
    verdict = verify_rand_sparse(planted, 16, Fraction(1, 2), BitSource(0))
    assert verdict.stats.random_bits == 3


def test_rand_sparse_t_zero_uses_no_randomness(z101):
    planted = gen_planted(PlantedConfig(4, z101, s=0, seed=0))
    assert verify_rand_sparse(planted, 0, Fraction(1, 2), BitSource(0)).stats.random_bits == 0


def test_rand_sparse_witnesses_validate(z101):
    planted = gen_planted(PlantedConfig(8, z101, s=5, seed=4))
    misses = 0
    for seed in range(100):
        verdict = verify_rand_sparse(planted, 8, Fraction(1, 4), BitSource(seed))
        if verdict.equal:
            misses += 1
            continue
        assert isinstance(verdict.witness, TestVectorWitness)
        assert validate_witness(planted, verdict)
    assert misses <= 40


def test_rand_sparse_soundness_rate():
    ring = IntRing(1024)
    eps = Fraction(1, 4)
    trials = 400
    misses = 0
    for i in range(trials):
        planted = gen_planted(PlantedConfig(16, ring, s=1 + i % 16, seed=i))
        misses += verify_rand_sparse(planted, 16, eps, BitSource(i)).equal
    # ε + 3σ
    assert misses / trials <= 0.25 + 3 * (0.25 * 0.75 / trials) ** 0.5


def test_rand_sparse_rejects_bad_eps(z7):
    with pytest.raises(InvalidParameter):
        verify_rand_sparse(_identity(z7, 2), 1, Fraction(3, 4), BitSource(0))


def test_rand_sparse_agrees_with_exact_on_extension(gf8):
    for seed in range(20):
        planted = gen_planted(PlantedConfig(4, gf8, s=seed % 3, seed=seed))
        verdict = verify_rand_sparse(planted, 4, Fraction(1, 2), BitSource(seed))
        if verify_exact(planted).equal:
            assert verdict.equal
        assert validate_witness(planted, verdict)


# ----------------------------------------------------------------------
# полный перебор одиночных искажений при n = 2
# ----------------------------------------------------------------------

def _z5_sample():
    rng = np.random.default_rng(2)
    fixed = [np.zeros((2, 2), dtype=np.int64), np.eye(2, dtype=np.int64)]
    return fixed + [rng.integers(0, 5, size=(2, 2)) for _ in range(18)]


def test_det_sparse_catches_every_single_corruption():
    field = PrimeField(5)
    sample = [Matrix(field, m) for m in _z5_sample()]
    for A in sample:
        for B in sample:
            product = (A.data @ B.data) % 5
            assert verify_det_sparse(Instance(A, B, Matrix(field, product)), 1).equal
            for case, (i, j, delta) in enumerate(itertools.product(range(2), range(2), range(1, 5))):
                corrupted = product.copy()
                corrupted[i, j] = (corrupted[i, j] + delta) % 5
                instance = Instance(A, B, Matrix(field, corrupted))
                verdict = verify_det_sparse(instance, 1 + case % 4)
                assert not verdict.equal
                assert validate_witness(instance, verdict)
