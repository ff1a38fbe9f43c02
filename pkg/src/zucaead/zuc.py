"""ZUC keystream generation for the three family variants.

``KeystreamGenerator`` wraps the backend word machine with byte-granular,
forward-only reads: the keystream is serialized as consecutive 32-bit words
in big-endian byte order and truncated at the tail, which realizes the
most-significant-bits truncation of the final word for byte lengths.

The ZUC-256 variant with a 128-bit IV is the 184-bit-IV parameter set with
the remaining IV cells fixed to zero: the 16 IV bytes fill iv0..iv15 and
iv16 plus the eight 6-bit cells are zero. Equivalently, the 16-byte IV is
zero-extended to 23 bytes before loading. This flattening is part of this
library's wire contract.
"""

from __future__ import annotations

import enum

from . import _backend

#: Cumulative keystream cap per generator, in bytes. Far above any AEAD
#: message this library accepts; keeps the emitted-word count bounded.
MESSAGE_KEYSTREAM_CAP = 2**32


class ZucVariant(enum.Enum):
    """Algorithm selector fixing the key and IV lengths."""

    ZUC128 = "zuc128"
    ZUC256_IV184 = "zuc256-iv184"
    ZUC256_IV128 = "zuc256-iv128"

    @classmethod
    def from_name(cls, name: str) -> "ZucVariant":
        for variant in cls:
            if variant.value == name:
                return variant
        raise ValueError(f"unknown ZUC variant: {name!r}")

    @property
    def key_bits(self) -> int:
        return 128 if self is ZucVariant.ZUC128 else 256

    @property
    def iv_bits(self) -> int:
        if self is ZucVariant.ZUC256_IV184:
            return 184
        return 128

    @property
    def key_bytes(self) -> int:
        return self.key_bits // 8

    @property
    def iv_bytes(self) -> int:
        return self.iv_bits // 8


class KeystreamGenerator:
    """Forward-only keystream reader for one (variant, key, IV) triple."""

    def __init__(self, variant: ZucVariant, key: bytes, iv: bytes):
        if len(key) != variant.key_bytes:
            raise ValueError(
                f"{variant.value} key must be {variant.key_bytes} bytes, got {len(key)}"
            )
        if len(iv) != variant.iv_bytes:
            raise ValueError(
                f"{variant.value} IV must be {variant.iv_bytes} bytes, got {len(iv)}"
            )
        if variant is ZucVariant.ZUC128:
            kind = 128
        else:
            kind = 256
            if variant is ZucVariant.ZUC256_IV128:
                iv = iv + bytes(7)
        self.variant = variant
        self._core = _backend.ZucCore(kind, key, iv)
        self._leftover = b""
        self._consumed = 0

    def read(self, nbytes: int) -> bytes:
        """The next ``nbytes`` bytes of keystream."""
        if nbytes < 0:
            raise ValueError("keystream length must be non-negative")
        if self._consumed + nbytes > MESSAGE_KEYSTREAM_CAP:
            raise ValueError(
                f"keystream request exceeds the per-message cap of "
                f"{MESSAGE_KEYSTREAM_CAP} bytes"
            )
        self._consumed += nbytes
        out = self._leftover
        if len(out) >= nbytes:
            self._leftover = out[nbytes:]
            return out[:nbytes]
        need = nbytes - len(out)
        nwords = (need + 3) // 4
        fresh = self._core.read_words(nwords)
        self._leftover = fresh[need:]
        return out + fresh[:need]

    def close(self) -> None:
        """Best-effort scrub of the underlying cipher state."""
        self._core.close()
        self._leftover = b""


def zuc_l(variant: ZucVariant, key: bytes, iv: bytes, nbytes: int) -> bytes:
    """One-shot keystream: initialize and read ``nbytes`` bytes."""
    gen = KeystreamGenerator(variant, key, iv)
    try:
        return gen.read(nbytes)
    finally:
        gen.close()
