# ring/spec.py — описание арифметической области и операции над массивами её элементов
# ---------------------------------------------------------------------------------------
"""RingSpec: Z_p, GF(p^e) и ℤ с ограничением |x| ≤ M.

Элементы хранятся в numpy-массивах:
  * PrimeField — int64-остатки в [0, p), форма (...);
  * ExtField   — int64-коэффициенты, форма (..., e), младший коэффициент первым;
  * IntRing    — int64 либо object (Python int), форма (...).

Все операции возвращают новые массивы, входы не меняются.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import galois
import numpy as np

from errors import InvalidParameter, NotInvertible, ParseError, TooLarge
from ring import arith
from ring.primes import PRIME_LIMIT, is_prime, mod_inverse


class RingSpec(ABC):
    """Общий интерфейс трёх областей."""

    is_field: bool = True

    @property
    @abstractmethod
    def token(self) -> str: ...

    @property
    @abstractmethod
    def size(self) -> int | None: ...

    @property
    def elem_shape(self) -> tuple[int, ...]:
        return ()

    def __str__(self) -> str:
        return self.token

    # ── конструирование ────────────────────────────────────────────────
    def zeros(self, shape: tuple[int, ...]) -> np.ndarray:
        return np.zeros(tuple(shape) + self.elem_shape, dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return self.from_ints(np.eye(n, dtype=np.int64))

    @abstractmethod
    def from_ints(self, values) -> np.ndarray:
        """Образ целых чисел в кольце (по модулю p / свободный член)."""

    def elements(self, count: int) -> np.ndarray:
        """Первые count элементов канонического перечисления 0, 1, 2, …"""
        size = self.size
        if size is not None and count > size:
            raise InvalidParameter(f"{self.token} has only {size} elements, asked for {count}")
        return self.from_ints(np.arange(count, dtype=np.int64))

    # ── поэлементные операции ──────────────────────────────────────────
    @abstractmethod
    def add(self, a: np.ndarray, b: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def neg(self, a: np.ndarray) -> np.ndarray: ...

    def sub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.add(a, self.neg(b))

    @abstractmethod
    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray: ...

    @abstractmethod
    def matmul(self, X: np.ndarray, Y: np.ndarray, tile: int) -> np.ndarray:
        """X (m×K) · Y (K×n) в терминах массивов элементов."""

    def inv(self, a: np.ndarray) -> np.ndarray:
        raise NotInvertible(f"{self.token} is not a field")

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        result = self.from_ints(np.ones(np.shape(a)[: np.ndim(a) - len(self.elem_shape)], dtype=np.int64))
        base = np.asarray(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # ── наблюдение ─────────────────────────────────────────────────────
    def nonzero_mask(self, arr: np.ndarray) -> np.ndarray:
        arr = np.asarray(arr)
        if self.elem_shape:
            return np.any(arr != 0, axis=-1)
        return arr != 0

    @abstractmethod
    def is_canonical(self, arr: np.ndarray) -> bool: ...

    @abstractmethod
    def format_element(self, value: np.ndarray) -> str: ...

    @abstractmethod
    def parse_element(self, text: str) -> np.ndarray:
        """Строгий разбор канонической записи; ValueError при ошибке."""

    def to_python(self, value: np.ndarray):
        """Элемент массива → int (Z_p, ℤ) или tuple коэффициентов (GF)."""
        if self.elem_shape:
            return tuple(int(c) for c in np.asarray(value))
        return int(value)


# ── Z_p ─────────────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class PrimeField(RingSpec):
    p: int

    def __post_init__(self) -> None:
        if not (2 <= self.p < PRIME_LIMIT) or not is_prime(self.p):
            raise InvalidParameter(f"zmod:{self.p} — modulus must be a prime below 2^61")

    @property
    def token(self) -> str:
        return f"zmod:{self.p}"

    @property
    def size(self) -> int:
        return self.p

    def from_ints(self, values) -> np.ndarray:
        arr = np.asarray(values)
        if arr.dtype == object or arith.max_abs(arr) >= arith.INT64_LIMIT // 2:
            return np.asarray(arr.astype(object) % self.p).astype(np.int64)
        return arr.astype(np.int64) % self.p

    def add(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        # a + b < 2p < 2^62
        return (a + b) % self.p

    def neg(self, a):
        return (-np.asarray(a, dtype=np.int64)) % self.p

    def mul(self, a, b):
        return arith.mulmod(a, b, self.p)

    def matmul(self, X, Y, tile):
        return arith.matmul_mod(X, Y, self.p, tile)

    def inv(self, a):
        return np.int64(mod_inverse(int(a), self.p))

    def is_canonical(self, arr) -> bool:
        arr = np.asarray(arr)
        return arr.size == 0 or bool(((arr >= 0) & (arr < self.p)).all())

    def format_element(self, value) -> str:
        return str(int(value))

    def parse_element(self, text: str) -> np.ndarray:
        value = _parse_canonical_int(text)
        if not 0 <= value < self.p:
            raise ValueError(f"{text} is not a canonical residue mod {self.p}")
        return np.int64(value)


# ── GF(p^e) ─────────────────────────────────────────────────────────────────
def _galois_poly(coeffs: tuple[int, ...], p: int) -> galois.Poly:
    """Коэффициенты по возрастанию степени → galois.Poly над GF(p)."""
    return galois.Poly(list(reversed(coeffs)), field=galois.GF(p))


@lru_cache(maxsize=None)
def _galois_field(p: int, e: int, ipoly: tuple[int, ...]) -> type[galois.FieldArray]:
    if e == 1:
        return galois.GF(p)
    return galois.GF(p ** e, irreducible_poly=_galois_poly(ipoly, p))


@lru_cache(maxsize=None)
def first_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Лексикографически первый нормированный неприводимый степени e над Z_p."""
    if e == 1:
        return (0, 1)
    f = galois.irreducible_poly(p, e, method="min")
    return tuple(int(c) for c in f.coefficients(order="asc"))


@dataclass(frozen=True)
class ExtField(RingSpec):
    """GF(p^e) по модулю ipoly; умножение и обращение считает galois.

    Элемент — вектор коэффициентов (c_0, …, c_{e−1}); его номер Σ c_i p^i
    совпадает с целочисленным представлением galois.
    """

    p: int
    e: int
    ipoly: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p >= PRIME_LIMIT:
            raise InvalidParameter(f"gf:{self.p}:{self.e} — characteristic must be a prime")
        if self.e < 1:
            raise InvalidParameter(f"gf:{self.p}:{self.e} — degree must be ≥ 1")
        if not self.ipoly:
            object.__setattr__(self, "ipoly", first_irreducible(self.p, self.e))
            return
        f = tuple(int(c) for c in self.ipoly)
        object.__setattr__(self, "ipoly", f)
        if len(f) != self.e + 1 or f[-1] != 1 or (self.e > 1 and not _galois_poly(f, self.p).is_irreducible()):
            raise InvalidParameter(f"{list(f)} is not a monic irreducible of degree {self.e} over Z_{self.p}")

    @property
    def token(self) -> str:
        return f"gf:{self.p}:{self.e}"

    @property
    def size(self) -> int:
        return self.p ** self.e

    @property
    def elem_shape(self) -> tuple[int, ...]:
        return (self.e,)

    @property
    def galois_field(self) -> type[galois.FieldArray]:
        return _galois_field(self.p, self.e, self.ipoly)

    @cached_property
    def _powers(self) -> np.ndarray:
        dtype = np.int64 if self.size < arith.INT64_LIMIT // 2 else object
        return np.array([self.p ** i for i in range(self.e)], dtype=dtype)

    # ── перевод в galois и обратно ──
    def to_galois(self, arr) -> galois.FieldArray:
        arr = np.asarray(arr, dtype=np.int64)
        if self._powers.dtype == object:
            arr = arr.astype(object)
        return self.galois_field(arr @ self._powers)

    def from_galois(self, x: galois.FieldArray) -> np.ndarray:
        idx = np.asarray(x.view(np.ndarray)).astype(self._powers.dtype)
        digits = (idx[..., None] // self._powers) % self.p
        return np.ascontiguousarray(digits.astype(np.int64))

    def from_ints(self, values) -> np.ndarray:
        arr = np.asarray(values)
        out = np.zeros(arr.shape + (self.e,), dtype=np.int64)
        out[..., 0] = PrimeField(self.p).from_ints(arr)
        return out

    def elements(self, count: int) -> np.ndarray:
        if count > self.size:
            raise InvalidParameter(f"{self.token} has only {self.size} elements, asked for {count}")
        idx = np.arange(count, dtype=np.int64)
        return ((idx[:, None] // self._powers) % self.p).astype(np.int64)

    def add(self, a, b):
        return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.p

    def neg(self, a):
        return (-np.asarray(a, dtype=np.int64)) % self.p

    def mul(self, a, b):
        return self.from_galois(self.to_galois(a) * self.to_galois(b))

    def matmul(self, X, Y, tile):
        # tile не нужен: произведение целиком считает galois
        return self.from_galois(self.to_galois(X) @ self.to_galois(Y))

    def inv(self, a):
        x = self.to_galois(a)
        if np.any(x == 0):
            raise NotInvertible(f"0 has no inverse in {self.token}")
        return self.from_galois(x ** -1)

    def pow(self, a, e: int):
        return self.from_galois(self.to_galois(a) ** e)

    def primitive_element(self) -> np.ndarray:
        return self.from_galois(self.galois_field.primitive_element)

    def is_canonical(self, arr) -> bool:
        arr = np.asarray(arr)
        return arr.size == 0 or (arr.shape[-1] == self.e and bool(((arr >= 0) & (arr < self.p)).all()))

    def format_element(self, value) -> str:
        return ":".join(str(int(c)) for c in np.asarray(value))

    def parse_element(self, text: str) -> np.ndarray:
        parts = text.split(":")
        if len(parts) != self.e:
            raise ValueError(f"{text} must have {self.e} colon-joined coefficients")
        coeffs = [_parse_canonical_int(part) for part in parts]
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"{text} has a coefficient outside [0, {self.p})")
        return np.array(coeffs, dtype=np.int64)


# ── ℤ, |x| ≤ M ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class IntRing(RingSpec):
    M: int

    is_field = False

    def __post_init__(self) -> None:
        if self.M < 1:
            raise InvalidParameter(f"int:{self.M} — bound must be ≥ 1")

    @property
    def token(self) -> str:
        return f"int:{self.M}"

    @property
    def size(self) -> None:
        return None

    def from_ints(self, values) -> np.ndarray:
        return arith.as_int_array(np.asarray(values))

    def elements(self, count: int) -> np.ndarray:
        return np.arange(count, dtype=np.int64)

    def add(self, a, b):
        return arith.add_int(np.asarray(a), np.asarray(b))

    def neg(self, a):
        a = np.asarray(a)
        return -a if a.dtype == object else -a.astype(np.int64)

    def mul(self, a, b):
        return arith.mul_int(np.asarray(a), np.asarray(b))

    def matmul(self, X, Y, tile):
        return arith.matmul_int(X, Y, tile)

    def is_canonical(self, arr) -> bool:
        return True

    def in_bound(self, arr) -> bool:
        return arith.max_abs(np.asarray(arr)) <= self.M

    def format_element(self, value) -> str:
        return str(int(value))

    def parse_element(self, text: str) -> np.ndarray:
        value = _parse_canonical_int(text, signed=True)
        return np.array(value, dtype=object if abs(value) >= arith.INT64_LIMIT else np.int64)


# ── токены ──────────────────────────────────────────────────────────────────
def _parse_canonical_int(text: str, signed: bool = False) -> int:
    body = text[1:] if signed and text.startswith("-") else text
    if not body.isdigit() or (len(body) > 1 and body[0] == "0") or text == "-0":
        raise ValueError(f"{text!r} is not a canonical integer")
    return int(text)


def parse_ring(token: str) -> RingSpec:
    """`zmod:<p>` | `gf:<p>:<e>` | `int:<M>` → RingSpec."""
    parts = token.strip().split(":")
    try:
        if parts[0] == "zmod" and len(parts) == 2:
            return PrimeField(int(parts[1]))
        if parts[0] == "gf" and len(parts) == 3:
            return ExtField(int(parts[1]), int(parts[2]))
        if parts[0] == "int" and len(parts) == 2:
            return IntRing(int(parts[1]))
    except ValueError as exc:
        raise ParseError(f"bad ring token {token!r}: {exc}", line=0) from exc
    raise ParseError(f"unknown ring token {token!r}", line=0)


def build_extension(p: int, min_size: int, cap: int | None = None) -> ExtField:
    """GF(p^e) с минимальным e, p^e ≥ min_size; ipoly — первый неприводимый."""
    if cap is None:
        from config import load_config

        cap = load_config().ext_cap
    if min_size < 2:
        raise InvalidParameter(f"min_size must be ≥ 2, got {min_size}")
    if not is_prime(p):
        raise InvalidParameter(f"{p} is not prime")
    e, size = 1, p
    while size < min_size:
        e += 1
        size *= p
        if size > cap:
            raise TooLarge(f"GF({p}^{e}) exceeds the extension cap {cap}")
    if size > cap:
        raise TooLarge(f"GF({p}^{e}) exceeds the extension cap {cap}")
    return ExtField(p, e, first_irreducible(p, e))
