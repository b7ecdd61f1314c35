# verify/registry.py — единая точка запуска верификаторов по имени
# ----------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from errors import InvalidParameter
from verify.baselines import (
    verify_exact,
    verify_freivalds,
    verify_geometric,
    verify_kimbrel_sinha,
    verify_korec_wiedermann,
)
from verify.bits import BitSource
from verify.instance import Instance, Verdict
from verify.sparse import verify_det_sparse, verify_rand_sparse


@dataclass(frozen=True)
class VerifyParams:
    """Параметры, общие для CLI и бенча. t = None — взять обещание экземпляра."""

    t: int | None = None
    eps: Fraction = Fraction(1, 2)
    rounds: int = 1
    seed: int = 0

    def promise(self, inst: Instance) -> int:
        if self.t is not None:
            return self.t
        if inst.promise_t is not None:
            return inst.promise_t
        return inst.n * inst.n


def _exact(inst: Instance, params: VerifyParams) -> Verdict:
    return verify_exact(inst)


def _freivalds(inst: Instance, params: VerifyParams) -> Verdict:
    return verify_freivalds(inst, params.rounds, BitSource(params.seed))


def _kimbrel_sinha(inst: Instance, params: VerifyParams) -> Verdict:
    return verify_kimbrel_sinha(inst, BitSource(params.seed))


def _korec_wiedermann(inst: Instance, params: VerifyParams) -> Verdict:
    return verify_korec_wiedermann(inst)


def _geometric(inst: Instance, params: VerifyParams) -> Verdict:
    return verify_geometric(inst, max(1, params.promise(inst)))


def _det_sparse(inst: Instance, params: VerifyParams) -> Verdict:
    return verify_det_sparse(inst, params.promise(inst))


def _rand_sparse(inst: Instance, params: VerifyParams) -> Verdict:
    return verify_rand_sparse(inst, params.promise(inst), params.eps, BitSource(params.seed))


VERIFIERS: dict[str, Callable[[Instance, VerifyParams], Verdict]] = {
    "exact": _exact,
    "freivalds": _freivalds,
    "kimbrel-sinha": _kimbrel_sinha,
    "korec-wiedermann": _korec_wiedermann,
    "geometric": _geometric,
    "det-sparse": _det_sparse,
    "rand-sparse": _rand_sparse,
}

RANDOMIZED = frozenset({"freivalds", "kimbrel-sinha", "rand-sparse"})


def run_verifier(alg: str, inst: Instance, params: VerifyParams | None = None) -> Verdict:
    try:
        verifier = VERIFIERS[alg]
    except KeyError:
        raise InvalidParameter(f"unknown algorithm {alg!r}; known: {', '.join(VERIFIERS)}") from None
    return verifier(inst, params or VerifyParams())
