"""ZUC-GXM: nonce-based authenticated encryption.

One keystream call covers the whole message: the first 128 bits mask the
tag, the remainder encrypts the plaintext, and the tag is the masked GHASH
of (AAD, ciphertext) truncated to the configured width.

Nonce uniqueness is the caller's contract and is NOT enforced here. Under a
repeated nonce the keystream repeats, so two ciphertexts XOR to the XOR of
their plaintexts and all confidentiality is lost. Use the MUR mode when
nonce handling cannot be guaranteed.
"""

from __future__ import annotations

import hmac
from dataclasses import dataclass
from typing import NamedTuple

from .ghash import GhashState, ghash
from ._backend import xor_bytes
from .errors import AuthenticationFailure
from .zuc import KeystreamGenerator, ZucVariant

_TAG_MASK_BYTES = 16

# Combined plaintext+AAD bit budget (conservatively applied for every tag
# width): 8*|P| + 8*|A| + 1 < 2^64.
_MAX_TOTAL_BITS = 2**64


def _check_tag_bits(tag_bits: int) -> None:
    if not 32 <= tag_bits <= 128:
        raise ValueError("tag length must be between 32 and 128 bits")
    if tag_bits % 8:
        raise ValueError("tag length must be a whole number of bytes")


@dataclass(frozen=True)
class GxmParams:
    """Mode configuration: the ZUC variant and the tag width in bits."""

    variant: ZucVariant
    tag_bits: int = 128

    def __post_init__(self) -> None:
        _check_tag_bits(self.tag_bits)

    @property
    def tag_bytes(self) -> int:
        return self.tag_bits // 8


@dataclass(frozen=True)
class AeadKey:
    """The two keys both modes consume: GHASH key ``h``, ZUC key ``k``."""

    h: bytes
    k: bytes


class SealedMessage(NamedTuple):
    ciphertext: bytes
    tag: bytes


def _check_common(params, key: AeadKey, nonce: bytes, aad: bytes, body: bytes) -> None:
    variant = params.variant
    if len(key.h) != 16:
        raise ValueError("GHASH key must be 16 bytes")
    if len(key.k) != variant.key_bytes:
        raise ValueError(f"{variant.value} key must be {variant.key_bytes} bytes")
    if len(nonce) != variant.iv_bytes:
        raise ValueError(f"{variant.value} nonce must be {variant.iv_bytes} bytes")
    if 8 * (len(body) + len(aad)) + 1 >= _MAX_TOTAL_BITS:
        raise ValueError("plaintext plus associated data exceeds the length bound")


def gxm_seal(
    params: GxmParams, key: AeadKey, nonce: bytes, aad: bytes, plaintext: bytes
) -> SealedMessage:
    """Encrypt and authenticate; returns (ciphertext, tag)."""
    _check_common(params, key, nonce, aad, plaintext)
    gen = KeystreamGenerator(params.variant, key.k, nonce)
    try:
        tag_mask = gen.read(_TAG_MASK_BYTES)
        ciphertext = xor_bytes(plaintext, gen.read(len(plaintext)))
    finally:
        gen.close()
    state = GhashState(key.h)
    state.update_aad(aad)
    state.update_data(ciphertext)
    tag = xor_bytes(tag_mask, state.finalize())[: params.tag_bytes]
    return SealedMessage(ciphertext, tag)


def gxm_open(
    params: GxmParams, key: AeadKey, nonce: bytes, aad: bytes, ciphertext: bytes, tag: bytes
) -> bytes:
    """Verify and decrypt; raises :class:`AuthenticationFailure` on mismatch.

    The tag is compared in constant time and no plaintext is produced
    unless verification succeeds.
    """
    _check_common(params, key, nonce, aad, ciphertext)
    if len(tag) != params.tag_bytes:
        raise ValueError(f"tag must be {params.tag_bytes} bytes for this configuration")
    gen = KeystreamGenerator(params.variant, key.k, nonce)
    try:
        tag_mask = gen.read(_TAG_MASK_BYTES)
        expected = xor_bytes(tag_mask, ghash(key.h, aad, ciphertext))
        if not hmac.compare_digest(expected[: params.tag_bytes], tag):
            raise AuthenticationFailure
        return xor_bytes(ciphertext, gen.read(len(ciphertext)))
    finally:
        gen.close()
