"""ZUC-MUR: nonce-misuse-resistant authenticated encryption.

A synthetic-IV variant in which the nonce enters both stages: the tag is
ZUC keystream taken at IV2 = Conv(GHASH_H(A, P)) xor N, and encryption uses
a second keystream at IV1 = Conv(Tag) xor N. The construction is
deterministic; repeating a (key, nonce, AAD, plaintext) tuple repeats the
output bit for bit, and that equality is the only thing nonce reuse leaks.

The same ZUC key drives tag generation and encryption; the chance that the
two derived IVs collide is negligible (and checked statistically in the
test suite). Decryption buffers the whole plaintext and suppresses it
unless the recomputed tag verifies.
"""

from __future__ import annotations

import hmac

from .ghash import ghash
from ._backend import xor_bytes
from .errors import AuthenticationFailure
from .gxm import AeadKey, GxmParams, SealedMessage, _check_common
from .zuc import ZucVariant, zuc_l

__all__ = ["MurParams", "conv", "mur_seal", "mur_open"]


class MurParams(GxmParams):
    """Mode configuration; identical shape to the GXM parameters.

    Tag widths are a byte multiple in [32, 128] bits, which also keeps the
    tag no longer than any variant's IV so that Conv applies to it.
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.tag_bits > self.variant.iv_bits:
            raise ValueError("tag cannot be longer than the variant's IV")


def conv(y: bytes, iv_bits: int) -> bytes:
    """Zero-extend ``y`` on the right to ``iv_bits`` bits.

    ``y`` longer than the IV is rejected; with the supported variants that
    can only happen through caller error, never through the modes below.
    """
    if iv_bits % 8:
        raise ValueError("IV width must be a whole number of bytes")
    iv_len = iv_bits // 8
    if len(y) > iv_len:
        raise ValueError("input is longer than the IV width")
    return y + bytes(iv_len - len(y))


def _tag_iv(params, key: AeadKey, nonce: bytes, aad: bytes, plaintext) -> bytes:
    y = ghash(key.h, aad, plaintext)
    return xor_bytes(conv(y, params.variant.iv_bits), nonce)


def mur_seal(
    params: MurParams, key: AeadKey, nonce: bytes, aad: bytes, plaintext: bytes
) -> SealedMessage:
    """Deterministically encrypt and authenticate; returns (ciphertext, tag)."""
    _check_common(params, key, nonce, aad, plaintext)
    variant = params.variant
    tag = zuc_l(variant, key.k, _tag_iv(params, key, nonce, aad, plaintext), params.tag_bytes)
    enc_iv = xor_bytes(conv(tag, variant.iv_bits), nonce)
    ciphertext = xor_bytes(plaintext, zuc_l(variant, key.k, enc_iv, len(plaintext)))
    return SealedMessage(ciphertext, tag)


def mur_open(
    params: MurParams, key: AeadKey, nonce: bytes, aad: bytes, ciphertext: bytes, tag: bytes
) -> bytes:
    """Verify and decrypt; raises :class:`AuthenticationFailure` on mismatch.

    Decryption necessarily precedes verification in this mode, so the
    candidate plaintext is held in a private buffer that is zeroed
    (best-effort) before the failure is raised.
    """
    _check_common(params, key, nonce, aad, ciphertext)
    if len(tag) != params.tag_bytes:
        raise ValueError(f"tag must be {params.tag_bytes} bytes for this configuration")
    variant = params.variant
    enc_iv = xor_bytes(conv(tag, variant.iv_bits), nonce)
    plaintext = bytearray(xor_bytes(ciphertext, zuc_l(variant, key.k, enc_iv, len(ciphertext))))
    expected = zuc_l(
        variant, key.k, _tag_iv(params, key, nonce, aad, memoryview(plaintext)), params.tag_bytes
    )
    if not hmac.compare_digest(expected, tag):
        plaintext[:] = bytes(len(plaintext))
        raise AuthenticationFailure
    return bytes(plaintext)
