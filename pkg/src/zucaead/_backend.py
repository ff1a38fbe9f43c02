"""Selects the compiled kernels when built, the pure-Python ones otherwise.

The environment variable ``ZUCAEAD_BACKEND`` forces the choice: ``c`` errors
out if the extension is missing, ``pure`` skips it. Everything downstream
resolves ``ZucCore``/``GhashCore``/``xor_bytes`` through this module, so
swapping the attributes here (as the test suite does) redirects the whole
library.
"""

from __future__ import annotations

import os

from . import _pure

_forced = os.environ.get("ZUCAEAD_BACKEND", "").strip().lower()

if _forced == "pure":
    _impl = _pure
elif _forced in ("", "c"):
    try:
        from . import _zuccore as _impl  # type: ignore[no-redef]
    except ImportError:
        if _forced == "c":
            raise ImportError(
                "ZUCAEAD_BACKEND=c requested but the compiled extension "
                "zucaead._zuccore is not available"
            ) from None
        _impl = _pure
else:
    raise ImportError(f"unknown ZUCAEAD_BACKEND value: {_forced!r}")

ZucCore = _impl.ZucCore
GhashCore = _impl.GhashCore
xor_bytes = _impl.xor_bytes


def backend_name() -> str:
    """Name of the active kernel backend: ``"c"`` or ``"pure"``."""
    return _impl.BACKEND


def available_backends() -> dict[str, object]:
    """Importable kernel modules keyed by backend name."""
    found: dict[str, object] = {"pure": _pure}
    try:
        from . import _zuccore

        found["c"] = _zuccore
    except ImportError:
        pass
    return found
