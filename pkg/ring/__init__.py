# ring/__init__.py

from .primes import (
    element_of_order_at_least,
    factorize,
    find_prime_in,
    is_prime,
    mod_inverse,
    primitive_root,
)
from .spec import (
    ExtField,
    IntRing,
    PrimeField,
    RingSpec,
    build_extension,
    parse_ring,
)
from .generators import field_generator, lift_ring

__all__ = [
    "ExtField",
    "IntRing",
    "PrimeField",
    "RingSpec",
    "build_extension",
    "element_of_order_at_least",
    "factorize",
    "field_generator",
    "find_prime_in",
    "is_prime",
    "lift_ring",
    "mod_inverse",
    "parse_ring",
    "primitive_root",
]
