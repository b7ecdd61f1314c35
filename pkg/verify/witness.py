# verify/witness.py — перепроверка свидетельств NotEqual
# ------------------------------------------------------
from __future__ import annotations

import numpy as np

from matrix import Matrix, dot, matvec, vecmat
from ring import RingSpec
from ring.generators import embed
from verify.instance import EntryWitness, Instance, ParityRowWitness, Side, TestVectorWitness, Verdict


def lift_instance(inst: Instance, ring: RingSpec) -> tuple[Matrix, Matrix, Matrix]:
    """A, B, C как матрицы над ring (Z_p ⊂ GF(p^e), ℤ → Z_q)."""
    return tuple(
        Matrix(ring, embed(M.data, inst.ring, ring)) for M in (inst.A, inst.B, inst.target)
    )


def _col(M: Matrix, j: int) -> np.ndarray:
    return M.data[:, j]


def witnessed_value(inst: Instance, verdict: Verdict) -> np.ndarray:
    """Пересчитанный элемент, на который указывает свидетельство."""
    w = verdict.witness
    if isinstance(w, EntryWitness):
        ring = inst.ring
        A, B, C = inst.A, inst.B, inst.target
        return ring.sub(dot(ring, A.data[w.i], _col(B, w.j)), C.data[w.i, w.j])
    A, B, C = lift_instance(inst, w.ring)
    ring = w.ring
    if isinstance(w, TestVectorWitness):
        v = w.vector
        if w.side is Side.DIRECT:
            return ring.sub(dot(ring, A.data[w.index], matvec(B, v)), dot(ring, C.data[w.index], v))
        return ring.sub(dot(ring, _col(B, w.index), vecmat(v, A)), dot(ring, _col(C, w.index), v))
    if isinstance(w, ParityRowWitness):
        h = w.parity
        if w.side is Side.DIRECT:
            column = matvec(A, _col(B, w.col))
            return ring.sub(dot(ring, h, column), dot(ring, h, _col(C, w.col)))
        return ring.sub(dot(ring, A.data[w.col], matvec(B, h)), dot(ring, C.data[w.col], h))
    raise TypeError(f"unknown witness {w!r}")


def validate_witness(inst: Instance, verdict: Verdict) -> bool:
    """NotEqual-свидетельство действительно указывает на ненулевой элемент."""
    if verdict.equal:
        return verdict.witness is None
    if verdict.witness is None:
        return False
    value = witnessed_value(inst, verdict)
    ring = inst.ring if isinstance(verdict.witness, EntryWitness) else verdict.witness.ring
    return bool(ring.nonzero_mask(value))
