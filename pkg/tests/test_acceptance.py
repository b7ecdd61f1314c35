# tests/test_acceptance.py — крупные прогоны: pytest -m slow
import asyncio
import json
import time
from fractions import Fraction
from math import ceil, log2

import numpy as np
import pytest

import mmv
from harness import PlantedConfig, estimate_failure_rate, gen_planted, run_selfcheck
from matrix import matmul, nnz
from reduce import allzeroes_to_inverse, mmv_to_allzeroes, mmv_to_symmetric
from ring import IntRing, PrimeField
from verify import (
    BitSource,
    Instance,
    VerifyParams,
    validate_witness,
    verify_det_sparse,
    verify_exact,
    verify_freivalds,
    verify_korec_wiedermann,
    verify_rand_sparse,
)

pytestmark = pytest.mark.slow


def _residual_nnz(instance):
    return nnz(matmul(instance.A, instance.B) - instance.target).nnz


# ----------------------------------------------------------------------
# точность детерминированного верификатора
# ----------------------------------------------------------------------

@pytest.mark.parametrize("ring", [IntRing(1024), PrimeField(101)], ids=lambda r: r.token)
@pytest.mark.parametrize("n", [8, 16, 32, 64])
def test_det_sparse_has_no_errors(ring, n):
    rng = np.random.default_rng(n)
    for seed in range(1250):
        s = int(rng.integers(0, n + 1))
        t = int(rng.integers(s, n + 1))
        planted = gen_planted(PlantedConfig(n, ring, s=s, seed=seed))
        verdict = verify_det_sparse(planted, t)
        assert verdict.equal == (s == 0)
        assert validate_witness(planted, verdict)


# ----------------------------------------------------------------------
# рандомизированный: вероятность и число бит
# ----------------------------------------------------------------------

@pytest.mark.parametrize("eps", [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)], ids=str)
@pytest.mark.parametrize("n", [16, 64, 256])
def test_rand_sparse_failure_rate_and_bits(n, eps):
    trials = 10_000
    cfg = PlantedConfig(n, IntRing(1024), s=n, seed=n)
    row = asyncio.run(estimate_failure_rate("rand-sparse", cfg, VerifyParams(t=n, eps=eps), trials))
    e = float(eps)
    assert row.failure_rate <= e + 3 * (e * (1 - e) / trials) ** 0.5
    assert row.random_bits_mean == ceil(0.5 * log2(n) + log2(1 / e))


# ----------------------------------------------------------------------
# Freivalds
# ----------------------------------------------------------------------

def test_freivalds_one_sided_and_detection():
    ring = PrimeField(101)
    for seed in range(1000):
        yes = gen_planted(PlantedConfig(8, ring, s=0, seed=seed))
        assert verify_freivalds(yes, 1, BitSource(seed)).equal
    no = [gen_planted(PlantedConfig(8, ring, s=1 + i % 4, seed=i)) for i in range(100)]
    detected = sum(not verify_freivalds(no[i % 100], 1, BitSource(i)).equal for i in range(10_000))
    assert 0.45 <= detected / 10_000 <= 1.0


# ----------------------------------------------------------------------
# Korec–Wiedermann
# ----------------------------------------------------------------------

def test_korec_wiedermann_has_no_errors():
    rng = np.random.default_rng(4)
    for seed in range(500):
        n = int(rng.integers(1, 65))
        ring = IntRing(int(rng.integers(1, 101)))
        s = int(rng.integers(0, 3))
        planted = gen_planted(PlantedConfig(n, ring, s=s, seed=seed))
        verdict = verify_korec_wiedermann(planted)
        assert verdict.equal == (s == 0)
        assert validate_witness(planted, verdict)


# ----------------------------------------------------------------------
# оракулы кодов
# ----------------------------------------------------------------------

def test_code_oracles():
    results = run_selfcheck()
    assert [r.name for r in results if not r.ok] == []


# ----------------------------------------------------------------------
# сведения
# ----------------------------------------------------------------------

@pytest.mark.parametrize("ring", [IntRing(20), PrimeField(13)], ids=lambda r: r.token)
def test_reduction_web(ring):
    for seed in range(1000):
        n = 1 + seed % 4
        planted = gen_planted(PlantedConfig(n, ring, s=seed % (n * n + 1), seed=seed))
        truth = verify_exact(planted).equal

        az = mmv_to_allzeroes(planted)
        assert _residual_nnz(az) == _residual_nnz(planted)
        assert verify_exact(az).equal == truth

        sym = mmv_to_symmetric(planted)
        assert sym.A == sym.A.T and sym.B == sym.B.T
        assert verify_exact(sym).equal == truth

        zero = Instance(planted.A, planted.B)
        inv = allzeroes_to_inverse(zero)
        assert verify_exact(inv).equal == verify_exact(zero).equal


# ----------------------------------------------------------------------
# относительная скорость
# ----------------------------------------------------------------------

def _timed(fn, *args):
    start = time.perf_counter()
    verdict = fn(*args)
    return time.perf_counter() - start, verdict


def test_relative_speed_at_n512():
    n = 512
    planted = gen_planted(PlantedConfig(n, IntRing(1024), s=n, seed=1))
    exact, truth = _timed(verify_exact, planted)
    det, det_verdict = _timed(verify_det_sparse, planted, n)
    rand, _ = _timed(verify_rand_sparse, planted, n, Fraction(1, 2), BitSource(0))
    assert not truth.equal and not det_verdict.equal
    assert det <= 0.25 * exact
    assert rand <= 0.05 * exact


# ----------------------------------------------------------------------
# детерминизм CLI
# ----------------------------------------------------------------------

def test_bench_cli_is_deterministic_across_threads(tmp_path, monkeypatch):
    config = tmp_path / "bench.json"
    config.write_text(
        json.dumps(
            {
                "seed": 31337,
                "trials": 200,
                "ring": "int:1024",
                "grid": {"alg": ["freivalds", "det-sparse", "rand-sparse"], "n": [16, 32], "s": [0, 4], "eps": ["1/2", "1/8"]},
            }
        )
    )
    outputs = []
    for threads in ("1", "4", "4"):
        monkeypatch.setenv("MMV_THREADS", threads)
        out = tmp_path / f"bench_{threads}_{len(outputs)}.csv"
        assert asyncio.run(mmv.main(["bench", "--config", str(config), "-o", str(out)])) == 0
        outputs.append([line.rsplit(",", 1)[0] for line in out.read_text().splitlines()])
    assert outputs[0] == outputs[1] == outputs[2]
