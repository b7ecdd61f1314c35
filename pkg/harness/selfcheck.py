# harness/selfcheck.py — прогон переборных оракулов кодов
# -------------------------------------------------------
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from codes import (
    CauchySpec,
    cauchy_det_closed_form,
    cauchy_matrix,
    check_k_regular,
    check_mds_parity,
    determinant,
    vandermonde_parity_check,
)
from ring import PrimeField

logger = logging.getLogger(__name__)

SELFCHECK_PRIMES = (13, 17)


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool


def _mds_checks(field: PrimeField, max_n: int, max_rows: int) -> list[CheckResult]:
    out = []
    for n in range(1, max_n + 1):
        for rows in range(1, min(n, max_rows) + 1):
            ok = check_mds_parity(vandermonde_parity_check(field, rows, n))
            out.append(CheckResult(f"mds {field.token} rows={rows} n={n}", ok))
    return out


def _cauchy_checks(field: PrimeField, max_dim: int) -> list[CheckResult]:
    out = []
    for n in range(1, max_dim + 1):
        for k in range(1, max_dim + 1):
            S = cauchy_matrix(field, n, k)
            ok = all(check_k_regular(S, size) for size in range(1, min(n, k) + 1))
            out.append(CheckResult(f"cauchy {field.token} {n}x{k} super regular", ok))
            if n == k:
                spec = CauchySpec(field, n, k)
                closed = cauchy_det_closed_form(field, spec.xs, spec.ys)
                ok = bool(np.array_equal(closed, determinant(field, S.data)))
                out.append(CheckResult(f"cauchy {field.token} {n}x{n} determinant", ok))
    return out


def run_selfcheck(primes=SELFCHECK_PRIMES, max_n: int = 12, max_rows: int = 6, max_cauchy: int = 6) -> list[CheckResult]:
    results = []
    for p in primes:
        field = PrimeField(p)
        results += _mds_checks(field, max_n, max_rows)
        results += _cauchy_checks(field, max_cauchy)
    failed = [r for r in results if not r.ok]
    for r in failed:
        logger.error("selfcheck failed: %s", r.name)
    logger.info("selfcheck: %d checks, %d failed", len(results), len(failed))
    return results
