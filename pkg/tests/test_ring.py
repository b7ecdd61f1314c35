# tests/test_ring.py
import numpy as np
import pytest

from errors import InvalidParameter, NoPrimeInRange, NotInvertible, OrderUnavailable, ParseError, TooLarge
from ring import (
    ExtField,
    IntRing,
    PrimeField,
    build_extension,
    element_of_order_at_least,
    field_generator,
    find_prime_in,
    is_prime,
    lift_ring,
    mod_inverse,
    parse_ring,
    primitive_root,
)
from ring.spec import first_irreducible


# ----------------------------------------------------------------------
# простые числа и обратные
# ----------------------------------------------------------------------

def test_find_prime_in():
    assert find_prime_in(10, 20) == 11
    assert find_prime_in(2, 2) == 2
    with pytest.raises(NoPrimeInRange):
        find_prime_in(8, 10)


def test_find_prime_rejects_bad_range():
    with pytest.raises(InvalidParameter):
        find_prime_in(1, 5)
    with pytest.raises(InvalidParameter):
        find_prime_in(10, 5)


def test_is_prime_small_values():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_mod_inverse():
    assert mod_inverse(3, 7) == 5
    assert mod_inverse(6, 7) == 6
    assert mod_inverse(1, 101) == 1
    with pytest.raises(NotInvertible):
        mod_inverse(0, 7)


def test_primitive_root_and_order():
    assert primitive_root(7) == 3
    assert element_of_order_at_least(PrimeField(7), 6) == 3
    assert element_of_order_at_least(PrimeField(5), 1) == 2
    with pytest.raises(OrderUnavailable):
        element_of_order_at_least(PrimeField(5), 10)


# ----------------------------------------------------------------------
# многочлены и расширения
# ----------------------------------------------------------------------

def test_first_irreducible():
    assert first_irreducible(2, 3) == (1, 1, 0, 1)     # x³ + x + 1
    assert first_irreducible(3, 2) == (1, 0, 1)        # x² + 1
    assert first_irreducible(5, 1) == (0, 1)


def test_ext_field_accepts_chosen_modulus():
    gf4 = ExtField(2, 2, (1, 1, 1))                    # x² + x + 1
    x = np.array([0, 1])
    assert gf4.mul(x, x).tolist() == [1, 1]
    assert ExtField(2, 2) == gf4


def test_build_extension():
    gf8 = build_extension(2, 8)
    assert (gf8.p, gf8.e) == (2, 3)
    assert gf8.ipoly == (1, 1, 0, 1)

    assert build_extension(3, 10).e == 3
    base = build_extension(7, 7)
    assert base.e == 1 and base.ipoly == (0, 1)


def test_build_extension_respects_cap():
    with pytest.raises(TooLarge):
        build_extension(2, 2 ** 20, cap=2 ** 10)


def test_ext_field_multiplication_and_inverse(gf8):
    x = np.array([0, 1, 0])
    # x³ = x + 1 по модулю x³ + x + 1
    assert gf8.mul(gf8.mul(x, x), x).tolist() == [1, 1, 0]
    for value in gf8.elements(8)[1:]:
        assert gf8.mul(value, gf8.inv(value)).tolist() == [1, 0, 0]


def test_ext_field_rejects_reducible_modulus():
    with pytest.raises(InvalidParameter):
        ExtField(2, 2, (1, 0, 1))


def test_field_generator_has_full_order(gf8):
    g = field_generator(gf8)
    seen = {tuple(gf8.pow(g, i).tolist()) for i in range(7)}
    assert len(seen) == 7


def test_lift_ring(z7):
    assert lift_ring(z7, 5) is z7
    lifted = lift_ring(z7, 50)
    assert isinstance(lifted, ExtField) and lifted.size == 343


# ----------------------------------------------------------------------
# арифметика и токены
# ----------------------------------------------------------------------

def test_prime_field_ops(z7):
    a, b = np.array([3, 6]), np.array([5, 4])
    assert z7.add(a, b).tolist() == [1, 3]
    assert z7.sub(a, b).tolist() == [5, 2]
    assert z7.mul(a, b).tolist() == [1, 3]


def test_large_prime_matmul_has_no_wraparound():
    p = find_prime_in(2 ** 40, 2 ** 40 + 10 ** 4)
    field = PrimeField(p)
    X = np.full((3, 3), p - 1, dtype=np.int64)
    out = field.matmul(X, X, 64)
    assert out.tolist() == [[3 % p] * 3] * 3


def test_int_ring_promotes_to_bignum():
    ring = IntRing(2 ** 40)
    a = np.array([2 ** 40], dtype=np.int64)
    assert int(ring.mul(a, a)[0]) == 2 ** 80


def test_parse_ring_tokens():
    assert parse_ring("zmod:101") == PrimeField(101)
    assert parse_ring("gf:2:3").token == "gf:2:3"
    assert parse_ring("int:1024") == IntRing(1024)
    with pytest.raises(ParseError):
        parse_ring("real:3")
    with pytest.raises(ParseError):
        parse_ring("zmod:8")


def test_canonical_element_parsing(z7, gf8, int1024):
    assert int(z7.parse_element("6")) == 6
    for bad in ("7", "07", "-1", "+1", ""):
        with pytest.raises(ValueError):
            z7.parse_element(bad)
    assert gf8.parse_element("1:0:1").tolist() == [1, 0, 1]
    with pytest.raises(ValueError):
        gf8.parse_element("1:2:0")
    assert int(int1024.parse_element("-17")) == -17
    with pytest.raises(ValueError):
        int1024.parse_element("-0")


# ----------------------------------------------------------------------
# аксиомы поля на случайных тройках
# ----------------------------------------------------------------------

def _random_elements(rng, ring, count):
    if isinstance(ring, ExtField):
        return rng.integers(0, ring.p, size=(count, ring.e)).astype(np.int64)
    return rng.integers(0, ring.p, size=count).astype(np.int64)


@pytest.mark.parametrize(
    "ring",
    [PrimeField(2), PrimeField(7), PrimeField(101), PrimeField(find_prime_in(2 ** 40, 2 ** 40 + 10 ** 4)), ExtField(2, 3), ExtField(3, 2), ExtField(7, 2)],
    ids=lambda r: r.token,
)
def test_field_axioms(ring):
    rng = np.random.default_rng(ring.size % 1000)
    count = 10_000
    a, b, c = (_random_elements(rng, ring, count) for _ in range(3))
    zero, one = ring.from_ints(np.zeros(count, dtype=np.int64)), ring.from_ints(np.ones(count, dtype=np.int64))

    assert np.array_equal(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)))
    assert np.array_equal(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)))
    assert np.array_equal(ring.add(a, b), ring.add(b, a))
    assert np.array_equal(ring.mul(a, b), ring.mul(b, a))
    assert np.array_equal(ring.mul(a, ring.add(b, c)), ring.add(ring.mul(a, b), ring.mul(a, c)))
    assert np.array_equal(ring.add(a, zero), a)
    assert np.array_equal(ring.mul(a, one), a)
    assert np.array_equal(ring.add(a, ring.neg(a)), zero)

    nonzero = ring.nonzero_mask(a)
    for value in a[nonzero]:
        assert np.array_equal(ring.mul(value, ring.inv(value)), ring.from_ints(1))
