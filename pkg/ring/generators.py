# ring/generators.py — образующие и переход к достаточно большому полю
# --------------------------------------------------------------------
from __future__ import annotations

import logging

import numpy as np

from errors import FieldTooSmall, OrderUnavailable, RingMismatch
from ring.primes import primitive_root
from ring.spec import ExtField, IntRing, PrimeField, RingSpec, build_extension

logger = logging.getLogger(__name__)


def field_generator(spec: RingSpec) -> np.ndarray:
    """Мультипликативная образующая поля: для Z_p наименьший первообразный корень,
    для GF(p^e) наименьший примитивный элемент galois."""
    if isinstance(spec, PrimeField):
        return np.int64(primitive_root(spec.p))
    if not isinstance(spec, ExtField):
        raise OrderUnavailable(f"{spec.token} is not a finite field")
    return spec.primitive_element()


def lift_ring(spec: RingSpec, min_size: int) -> RingSpec:
    """Поле не меньше min_size, содержащее spec (Z_p поднимается в GF(p^e))."""
    if isinstance(spec, IntRing):
        raise RingMismatch("integer instances are verified through a prime, not lifted")
    if spec.size >= min_size:
        return spec
    if isinstance(spec, PrimeField):
        ext = build_extension(spec.p, min_size)
        logger.debug("lifted %s to %s (ipoly %s)", spec.token, ext.token, ext.ipoly)
        return ext
    raise FieldTooSmall(f"{spec.token} has {spec.size} < {min_size} elements and cannot be lifted")


def embed(arr: np.ndarray, src: RingSpec, dst: RingSpec) -> np.ndarray:
    """Образ массива элементов src в dst (src ⊆ dst)."""
    if src == dst:
        return arr
    if isinstance(src, PrimeField) and isinstance(dst, ExtField) and src.p == dst.p:
        return dst.from_ints(arr)
    if isinstance(src, IntRing) and isinstance(dst, PrimeField):
        return dst.from_ints(arr)
    raise RingMismatch(f"cannot embed {src.token} into {dst.token}")
