"""Key derivation: both AEAD keys from one master key, using ZUC itself.

DeriveKey expands the master key with a (128 + k)-bit keystream at a public
IV: the first 128 bits become the GHASH key H and the remaining k bits the
ZUC key K. The IV is a deployment-level system parameter; all zeros is the
documented default.
"""

from __future__ import annotations

from .gxm import AeadKey
from .zuc import ZucVariant, zuc_l

_GHASH_KEY_LEN = 16


def derive_key(
    variant: ZucVariant, master_key: bytes, iv0: bytes | None = None
) -> AeadKey:
    """Derive H and K from ``master_key`` at the system parameter ``iv0``."""
    if len(master_key) != variant.key_bytes:
        raise ValueError(
            f"{variant.value} master key must be {variant.key_bytes} bytes"
        )
    if iv0 is None:
        iv0 = bytes(variant.iv_bytes)
    elif len(iv0) != variant.iv_bytes:
        raise ValueError(f"{variant.value} iv0 must be {variant.iv_bytes} bytes")
    stream = zuc_l(variant, master_key, iv0, _GHASH_KEY_LEN + variant.key_bytes)
    return AeadKey(h=stream[:_GHASH_KEY_LEN], k=stream[_GHASH_KEY_LEN:])
