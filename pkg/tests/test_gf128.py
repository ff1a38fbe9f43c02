import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zucaead import gf128

from .oracles import gf_mul_ref_bytes

ELEMENT = st.binary(min_size=16, max_size=16)


def test_add_self_is_zero():
    x = bytes(range(16))
    assert gf128.add(x, x) == gf128.ZERO


def test_add_zero_is_identity():
    x = bytes(range(16))
    assert gf128.add(x, gf128.ZERO) == x


def test_add_disjoint_bits():
    a = bytes.fromhex("80" + "00" * 15)
    b = bytes.fromhex("40" + "00" * 15)
    assert gf128.add(a, b) == bytes.fromhex("c0" + "00" * 15)


def test_mul_by_zero_absorbs():
    x = bytes.fromhex("deadbeef" * 4)
    assert gf128.mul(x, gf128.ZERO) == gf128.ZERO
    assert gf128.mul(gf128.ZERO, x) == gf128.ZERO


def test_mul_identity():
    x = bytes.fromhex("0123456789abcdef0011223344556677")
    assert gf128.mul(x, gf128.ONE) == x
    assert gf128.mul(gf128.ONE, x) == x


def test_mul_against_published_ghash_step():
    # H and the first-block product from GCM spec test case 2:
    # Y1 = C1 * H with C1 = AES_0(ctr1), H = AES_0(0).
    h = bytes.fromhex("66e94bd4ef8a2c3b884cfa59ca342b2e")
    c1 = bytes.fromhex("0388dace60b6a392f328c2b971b2fe78")
    expected = bytes.fromhex("5e2ec746917062882c85b0685353deb7")
    assert gf128.mul(c1, h) == expected
    assert gf_mul_ref_bytes(c1, h) == expected


def test_wrong_length_rejected():
    with pytest.raises(ValueError):
        gf128.add(b"short", bytes(16))
    with pytest.raises(ValueError):
        gf128.mul(bytes(16), bytes(17))


def test_mul_agrees_with_bitserial_oracle():
    rng = random.Random(1)
    for _ in range(2000):
        a = rng.randbytes(16)
        b = rng.randbytes(16)
        assert gf128.mul(a, b) == gf_mul_ref_bytes(a, b)


def test_product_mul_bitserial_matches_table_path():
    rng = random.Random(2)
    for _ in range(500):
        a = rng.randbytes(16)
        b = rng.randbytes(16)
        assert gf128.mul_bitserial(a, b) == gf128.mul(a, b)


@settings(max_examples=200, deadline=None)
@given(ELEMENT, ELEMENT)
def test_commutative(a, b):
    assert gf128.mul(a, b) == gf128.mul(b, a)


@settings(max_examples=100, deadline=None)
@given(ELEMENT, ELEMENT, ELEMENT)
def test_associative(a, b, c):
    assert gf128.mul(a, gf128.mul(b, c)) == gf128.mul(gf128.mul(a, b), c)


@settings(max_examples=100, deadline=None)
@given(ELEMENT, ELEMENT, ELEMENT)
def test_distributive(a, b, c):
    left = gf128.mul(a, gf128.add(b, c))
    right = gf128.add(gf128.mul(a, b), gf128.mul(a, c))
    assert left == right
