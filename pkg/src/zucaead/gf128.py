"""Arithmetic in GF(2^128) with the GCM polynomial and bit ordering.

Elements are 16-byte strings. The leftmost (first) bit of the string is the
coefficient of x^0 and the rightmost bit is the coefficient of x^127, so the
byte string ``80 00 .. 00`` encodes the constant polynomial 1. Reduction uses

    p(x) = 1 + x + x^2 + x^7 + x^128

which is the GCM field, so published GCM/GHASH values are valid oracles for
this module.

Internally elements are handled as 128-bit integers obtained by reading the
16 bytes big-endian; under that mapping "multiply by x" is an integer right
shift with a conditional XOR of ``R_POLY``.

``mul`` is table-driven (Shoup's 4-bit method) and is not constant-time:
its per-nibble table lookups are data-dependent, like every table-based
GHASH. ``mul_bitserial`` is the plain shift-and-reduce form, kept as a
readable reference and as the "naive" path for benchmarks; it is also not
constant-time in CPython (big-int branching). Callers needing side-channel
hardening should rely on the compiled backend and the notes in the README.
"""

from __future__ import annotations

# x^1 + x^2 + x^7 + 1 placed at the x^0..x^7 bit positions: the term folded
# in whenever a multiply-by-x shifts a coefficient past x^127.
R_POLY = 0xE1 << 120

#: The multiplicative identity (constant polynomial 1).
ONE = (1 << 127).to_bytes(16, "big")

#: The additive identity.
ZERO = bytes(16)


def to_int(a: bytes) -> int:
    if len(a) != 16:
        raise ValueError("field element must be exactly 16 bytes")
    return int.from_bytes(a, "big")


def from_int(x: int) -> bytes:
    return x.to_bytes(16, "big")


def add(a: bytes, b: bytes) -> bytes:
    """Field addition: bitwise XOR of two 16-byte elements."""
    return from_int(to_int(a) ^ to_int(b))


def mulx_int(v: int) -> int:
    """Multiply an element (as int) by x, reducing mod p(x)."""
    if v & 1:
        return (v >> 1) ^ R_POLY
    return v >> 1


def _build_rem4() -> tuple[int, ...]:
    # Entry r: the four bits shifted out by ">> 4" (bit 0 of r was the
    # x^127 coefficient) re-enter as r(x)*x^(-4)*p'(x) terms. Deriving each
    # single-bit wrap directly keeps this free of sign conventions:
    #   bit k of r held the coefficient of x^(127-k); after *x^4 it lands on
    #   x^(131-k) = x^(3-k) * x^128 = x^(3-k) * (1 + x + x^2 + x^7).
    base = R_POLY  # (1 + x + x^2 + x^7), i.e. the k = 3 case times x^0
    single = []
    for j in range(4):  # j = 3 - k: multiply the wrap by x^j
        v = base
        for _ in range(j):
            v = mulx_int(v)
        single.append(v)
    # single[j] corresponds to r-bit k = 3 - j.
    table = [0] * 16
    for r in range(16):
        t = 0
        for k in range(4):
            if r & (1 << k):
                t ^= single[3 - k]
        table[r] = t
    return tuple(table)


REM4 = _build_rem4()


def build_4bit_table(h_int: int) -> list[int]:
    """Precompute T[n] = n(x) * h for all 4-bit chunks n.

    Within a nibble, bit 3 (value 8) is the chunk's first bit in string
    order, so T[8] = h and each halving of the index multiplies by x.
    """
    table = [0] * 16
    v = h_int
    table[8] = v
    v = mulx_int(v)
    table[4] = v
    v = mulx_int(v)
    table[2] = v
    v = mulx_int(v)
    table[1] = v
    for i in (2, 4, 8):
        for j in range(1, i):
            table[i | j] = table[i] ^ table[j]
    return table


def gmult_4bit(table: list[int], x_int: int) -> int:
    """Product x * h given the 4-bit table of h, nibble by nibble."""
    rem4 = REM4
    z = table[x_int & 0xF]
    for k in range(1, 32):
        z = (z >> 4) ^ rem4[z & 0xF]
        z ^= table[(x_int >> (4 * k)) & 0xF]
    return z


def mul(a: bytes, b: bytes) -> bytes:
    """Field multiplication of two 16-byte elements."""
    table = build_4bit_table(to_int(a))
    return from_int(gmult_4bit(table, to_int(b)))


def mul_bitserial(a: bytes, b: bytes) -> bytes:
    """Shift-and-reduce multiplication; slow, branch-per-bit reference."""
    x = to_int(a)
    v = to_int(b)
    z = 0
    for i in range(127, -1, -1):
        if (x >> i) & 1:
            z ^= v
        v = mulx_int(v)
    return from_int(z)
