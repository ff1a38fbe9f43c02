"""Authenticated encryption for the ZUC family of stream ciphers.

Two AEAD modes over one keystream/GHASH core:

* GXM — nonce-based, single keystream pass; fast, but nonces must never
  repeat under a key.
* MUR — deterministic synthetic-IV construction that survives nonce reuse
  with equality-of-(nonce, AAD, plaintext) as the only leakage.

Hot kernels (ZUC word generation, GHASH folding) run in a compiled
extension when built, with a bit-identical pure-Python fallback; see
:func:`backend_name`.
"""

from ._backend import available_backends, backend_name, xor_bytes
from .errors import AuthenticationFailure
from .ghash import GhashState, ghash
from .gxm import AeadKey, GxmParams, SealedMessage, gxm_open, gxm_seal
from .kdf import derive_key
from .mur import MurParams, conv, mur_open, mur_seal
from .zuc import KeystreamGenerator, ZucVariant, zuc_l

__version__ = "0.1.0"

__all__ = [
    "AeadKey",
    "AuthenticationFailure",
    "GhashState",
    "GxmParams",
    "KeystreamGenerator",
    "MurParams",
    "SealedMessage",
    "ZucVariant",
    "available_backends",
    "backend_name",
    "conv",
    "derive_key",
    "ghash",
    "gxm_open",
    "gxm_seal",
    "mur_open",
    "mur_seal",
    "xor_bytes",
    "zuc_l",
]
