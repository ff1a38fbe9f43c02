"""GHASH: polynomial evaluation hash over GF(2^128), GCM-compatible.

The hash of (A, X) zero-pads each of the two regions to a multiple of 128
bits, appends a length block of the two 64-bit big-endian bit counts, and
Horner-evaluates the resulting block sequence at the key H:

    Y = 0;  Y = (Y xor block) * H   for each block

Inputs are byte strings (bit-granular messages are out of scope). An
all-zero key annihilates every term, and the hash of two empty strings is
all zeros for any key; both follow from the definition and are asserted in
the test suite.
"""

from __future__ import annotations

import struct

from . import _backend

_BLOCK = 16

# Region bit counts are carried in 64-bit fields.
_MAX_REGION_BITS = 2**64


class GhashState:
    """Incremental GHASH over the two regions (associated data, then data).

    Chunks may be any byte length; region padding is applied automatically
    when switching from the AAD region to the data region and at
    finalization. ``finalize`` may be called once.
    """

    def __init__(self, h: bytes):
        self._core = _backend.GhashCore(h)
        self._y = bytes(_BLOCK)
        self._buf = bytearray()  # unaligned tail, always < 16 bytes
        self._abits = 0
        self._xbits = 0
        self._in_data = False
        self._done = False

    def _feed(self, chunk) -> None:
        # Fold aligned input straight from the caller's buffer; only the
        # sub-block tail is ever copied.
        mv = memoryview(chunk)
        buf = self._buf
        if buf:
            take = min(_BLOCK - len(buf), len(mv))
            buf.extend(mv[:take])
            mv = mv[take:]
            if len(buf) == _BLOCK:
                self._y = self._core.fold(self._y, bytes(buf))
                buf.clear()
        aligned = len(mv) - (len(mv) % _BLOCK)
        if aligned:
            self._y = self._core.fold(self._y, mv[:aligned])
            mv = mv[aligned:]
        if len(mv):
            buf.extend(mv)

    def _pad_region(self) -> None:
        if self._buf:
            self._buf.extend(bytes(_BLOCK - len(self._buf)))
            self._y = self._core.fold(self._y, bytes(self._buf))
            self._buf.clear()

    def update_aad(self, chunk) -> None:
        if self._done:
            raise RuntimeError("GhashState already finalized")
        if self._in_data:
            raise RuntimeError("associated data must precede message data")
        self._abits += 8 * len(chunk)
        if self._abits >= _MAX_REGION_BITS:
            raise ValueError("associated data exceeds the 2^64-bit limit")
        self._feed(chunk)

    def update_data(self, chunk) -> None:
        if self._done:
            raise RuntimeError("GhashState already finalized")
        if not self._in_data:
            self._pad_region()
            self._in_data = True
        self._xbits += 8 * len(chunk)
        if self._xbits >= _MAX_REGION_BITS:
            raise ValueError("data exceeds the 2^64-bit limit")
        self._feed(chunk)

    def finalize(self) -> bytes:
        """Pad the current region, fold in the length block, return Y."""
        if self._done:
            raise RuntimeError("GhashState already finalized")
        self._done = True
        self._pad_region()
        length_block = struct.pack(">QQ", self._abits, self._xbits)
        return self._core.fold(self._y, length_block)


def ghash(h: bytes, aad: bytes, data: bytes) -> bytes:
    """One-shot GHASH_H(aad, data)."""
    state = GhashState(h)
    state.update_aad(aad)
    state.update_data(data)
    return state.finalize()


def ghash_bitserial(h: bytes, aad: bytes, data: bytes) -> bytes:
    """GHASH without key precomputation, one shift-and-reduce mul per block.

    Exists as the benchmark baseline showing what the per-key table buys;
    output is identical to :func:`ghash`.
    """
    from . import gf128

    if 8 * len(aad) >= _MAX_REGION_BITS or 8 * len(data) >= _MAX_REGION_BITS:
        raise ValueError("input exceeds the 2^64-bit limit")
    stream = (
        aad + bytes(-len(aad) % _BLOCK)
        + data + bytes(-len(data) % _BLOCK)
        + struct.pack(">QQ", 8 * len(aad), 8 * len(data))
    )
    y = bytes(_BLOCK)
    for off in range(0, len(stream), _BLOCK):
        y = gf128.mul_bitserial(h, gf128.add(y, stream[off:off + _BLOCK]))
    return y
