# ring/primes.py — простые числа, обратные по модулю, образующие Z_p^*
# ---------------------------------------------------------------------
from __future__ import annotations

import logging
from math import isqrt

from errors import InvalidParameter, NoPrimeInRange, NotInvertible, OrderUnavailable

logger = logging.getLogger(__name__)

PRIME_LIMIT = 2 ** 61


def is_prime(n: int) -> bool:
    """Детерминированная проверка делением до √n."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    root = isqrt(n)
    while d <= root:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def find_prime_in(lo: int, hi: int) -> int:
    """Наименьшее простое p, lo ≤ p ≤ hi."""
    if lo < 2 or hi < lo or hi >= PRIME_LIMIT:
        raise InvalidParameter(f"need 2 <= lo <= hi < 2^61, got lo={lo}, hi={hi}")
    for candidate in range(lo, hi + 1):
        if is_prime(candidate):
            return candidate
    raise NoPrimeInRange(f"no prime in [{lo}, {hi}]")


def factorize(n: int) -> list[int]:
    """Различные простые делители n (по возрастанию)."""
    if n < 1:
        raise InvalidParameter(f"cannot factor {n}")
    factors: list[int] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def mod_inverse(a: int, p: int) -> int:
    """b ∈ [1, p) с a·b ≡ 1 (mod p), расширенный алгоритм Евклида."""
    a %= p
    if a == 0:
        raise NotInvertible(f"0 has no inverse mod {p}")
    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NotInvertible(f"{a} is not invertible mod {p}")
    return old_s % p


def primitive_root(p: int) -> int:
    """Первый кандидат 2, 3, … порождающий Z_p^*."""
    if p == 2:
        return 1
    order = p - 1
    factors = factorize(order)
    for g in range(2, p):
        if all(pow(g, order // f, p) != 1 for f in factors):
            return g
    raise OrderUnavailable(f"Z_{p}^* has no generator (is {p} prime?)")


def element_of_order_at_least(spec, m: int) -> int:
    """Образующая Z_p^* (порядок p − 1 ≥ m)."""
    p = spec.p
    if p - 1 < m:
        raise OrderUnavailable(f"Z_{p}^* has order {p - 1} < {m}")
    g = primitive_root(p)
    logger.debug("generator of Z_%d^*: %d", p, g)
    return g
