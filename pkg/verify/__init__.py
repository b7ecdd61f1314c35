# verify/__init__.py

from .baselines import (
    mps_decide,
    verify_exact,
    verify_freivalds,
    verify_freivalds_k,
    verify_geometric,
    verify_k_exact,
    verify_kimbrel_sinha,
    verify_korec_wiedermann,
)
from .bits import BitSource, derive_seed, mix64
from .instance import (
    Answer,
    EntryWitness,
    Instance,
    KInstance,
    ParityRowWitness,
    RunStats,
    Side,
    TestVectorWitness,
    Verdict,
)
from .registry import RANDOMIZED, VERIFIERS, VerifyParams, run_verifier
from .sparse import verify_det_sparse, verify_rand_sparse
from .witness import lift_instance, validate_witness

__all__ = [
    "Answer",
    "BitSource",
    "EntryWitness",
    "Instance",
    "KInstance",
    "ParityRowWitness",
    "RANDOMIZED",
    "RunStats",
    "Side",
    "TestVectorWitness",
    "VERIFIERS",
    "Verdict",
    "VerifyParams",
    "derive_seed",
    "lift_instance",
    "mix64",
    "mps_decide",
    "run_verifier",
    "validate_witness",
    "verify_det_sparse",
    "verify_exact",
    "verify_freivalds",
    "verify_freivalds_k",
    "verify_geometric",
    "verify_k_exact",
    "verify_kimbrel_sinha",
    "verify_korec_wiedermann",
    "verify_rand_sparse",
]
