"""Known-answer test vectors: data model, JSONL file format, runner.

One JSON object per line, lowercase hex, explicit ``tag_len_bits``. Modes:

* ``keystream`` — ``key_k``/``nonce`` are the ZUC key/IV, ``ct`` is the
  expected keystream (its length fixes the request); ``pt`` is unused.
* ``gxm`` / ``mur`` — full AEAD records; sealing must reproduce ``ct`` and
  ``tag`` and opening must give back ``pt``.
* ``kdf`` — ``key_k`` is the master key, ``nonce`` is IV0, ``ct`` is the
  expected H||K.

The packaged files under ``zucaead/data/`` are the pinned corpus: official
keystream vectors (see PROVENANCE.md there) plus this library's generated
AEAD interchange vectors.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .gxm import AeadKey, GxmParams, gxm_open, gxm_seal
from .kdf import derive_key
from .mur import MurParams, mur_open, mur_seal
from .zuc import ZucVariant, zuc_l

MODES = ("keystream", "gxm", "mur", "kdf")

#: Message sizes covered by the generated interchange corpus.
CORPUS_SIZES = (0, 1, 15, 16, 17, 255, 1500)
CORPUS_TAG_BITS = (32, 64, 96, 128)
DEFAULT_CORPUS_SEED = "zucaead-corpus-v1"


class VectorFormatError(ValueError):
    """A vector record is malformed; ``field`` names the offender."""

    def __init__(self, vector_id: str, field_name: str, reason: str):
        self.vector_id = vector_id
        self.field = field_name
        super().__init__(f"vector {vector_id!r}, field {field_name!r}: {reason}")


@dataclass
class TestVector:
    __test__ = False  # keep pytest from collecting this as a test class

    id: str
    variant: str
    mode: str
    key_h: str = ""
    key_k: str = ""
    nonce: str = ""
    aad: str = ""
    pt: str = ""
    ct: str = ""
    tag: str = ""
    tag_len_bits: int = 0

    def to_json_line(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_line(cls, line: str) -> "TestVector":
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            raise VectorFormatError("<unparsed>", "<line>", str(exc)) from exc
        if not isinstance(raw, dict):
            raise VectorFormatError("<unparsed>", "<line>", "not a JSON object")
        vector_id = str(raw.get("id", "<missing id>"))
        known = set(cls.__dataclass_fields__)
        for key in raw:
            if key not in known:
                raise VectorFormatError(vector_id, key, "unknown field")
        for key in ("id", "variant", "mode"):
            if key not in raw:
                raise VectorFormatError(vector_id, key, "missing required field")
        return cls(**raw)


@dataclass
class Mismatch:
    field: str
    offset: int
    expected: str
    actual: str


@dataclass
class RunReport:
    vector_id: str
    passed: bool
    mismatches: list[Mismatch] = field(default_factory=list)

    def describe(self) -> str:
        if self.passed:
            return f"ok   {self.vector_id}"
        parts = ", ".join(
            f"{m.field}@{m.offset} expected {m.expected or '<none>'} got {m.actual or '<none>'}"
            for m in self.mismatches
        )
        return f"FAIL {self.vector_id}: {parts}"


def _hex_field(v: TestVector, name: str) -> bytes:
    value = getattr(v, name)
    try:
        return bytes.fromhex(value)
    except ValueError as exc:
        raise VectorFormatError(v.id, name, "invalid hex") from exc


def _first_diff(expected: bytes, actual: bytes) -> int:
    for i, (x, y) in enumerate(zip(expected, actual)):
        if x != y:
            return i
    return min(len(expected), len(actual))


def _compare(report: RunReport, field_name: str, expected: bytes, actual: bytes) -> None:
    if expected != actual:
        off = _first_diff(expected, actual)
        report.passed = False
        report.mismatches.append(
            Mismatch(field_name, off, expected[off:off + 8].hex(), actual[off:off + 8].hex())
        )


def run_vector(v: TestVector) -> RunReport:
    """Execute one vector and compare byte-exactly; never raises on mismatch."""
    try:
        variant = ZucVariant.from_name(v.variant)
    except ValueError as exc:
        raise VectorFormatError(v.id, "variant", str(exc)) from exc
    if v.mode not in MODES:
        raise VectorFormatError(v.id, "mode", f"unknown mode {v.mode!r}")

    report = RunReport(v.id, passed=True)
    key_k = _hex_field(v, "key_k")
    nonce = _hex_field(v, "nonce")
    ct = _hex_field(v, "ct")

    if v.mode == "keystream":
        if len(key_k) != variant.key_bytes:
            raise VectorFormatError(v.id, "key_k", "length does not match variant")
        if len(nonce) != variant.iv_bytes:
            raise VectorFormatError(v.id, "nonce", "length does not match variant")
        _compare(report, "ct", ct, zuc_l(variant, key_k, nonce, len(ct)))
        return report

    if v.mode == "kdf":
        derived = derive_key(variant, key_k, nonce or None)
        _compare(report, "ct", ct, derived.h + derived.k)
        return report

    key_h = _hex_field(v, "key_h")
    aad = _hex_field(v, "aad")
    pt = _hex_field(v, "pt")
    tag = _hex_field(v, "tag")
    if v.tag_len_bits != 8 * len(tag):
        raise VectorFormatError(v.id, "tag_len_bits", "inconsistent with tag length")
    try:
        if v.mode == "gxm":
            params = GxmParams(variant, v.tag_len_bits)
            sealed = gxm_seal(params, AeadKey(key_h, key_k), nonce, aad, pt)
        else:
            params = MurParams(variant, v.tag_len_bits)
            sealed = mur_seal(params, AeadKey(key_h, key_k), nonce, aad, pt)
    except ValueError as exc:
        raise VectorFormatError(v.id, "variant", str(exc)) from exc
    _compare(report, "ct", ct, sealed.ciphertext)
    _compare(report, "tag", tag, sealed.tag)
    if report.passed:
        # Also exercise the opening direction on the expected values.
        opener = gxm_open if v.mode == "gxm" else mur_open
        _compare(report, "pt", pt, opener(params, AeadKey(key_h, key_k), nonce, aad, ct, tag))
    return report


def run_vectors(vectors: Iterable[TestVector]) -> list[RunReport]:
    return [run_vector(v) for v in vectors]


def load_vectors(path: str | Path) -> Iterator[TestVector]:
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            yield TestVector.from_json_line(line)


def save_vectors(path: str | Path, vectors: Iterable[TestVector]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in vectors:
            fh.write(v.to_json_line() + "\n")


class _DetStream:
    """Deterministic byte stream: SHA-256 in counter mode over a seed label.

    Keeps corpus generation independent of any RNG implementation, so the
    same seed yields the same file on any platform or runtime.
    """

    def __init__(self, seed: str):
        self._seed = seed.encode()
        self._counter = 0
        self._pool = b""

    def take(self, n: int) -> bytes:
        while len(self._pool) < n:
            block = hashlib.sha256(
                self._seed + b"|" + str(self._counter).encode()
            ).digest()
            self._pool += block
            self._counter += 1
        out, self._pool = self._pool[:n], self._pool[n:]
        return out


def generate_vectors(
    seed: str = DEFAULT_CORPUS_SEED,
    sizes: tuple[int, ...] = CORPUS_SIZES,
    tag_bits: tuple[int, ...] = CORPUS_TAG_BITS,
) -> list[TestVector]:
    """Reproducible AEAD interchange corpus (plus one KDF row per variant).

    These vectors are implementation-defined: no standard publishes AEAD
    vectors for these modes, so this corpus is the cross-implementation
    exchange set, pinned by construction from the deterministic seed.
    """
    out: list[TestVector] = []
    stream = _DetStream(seed)
    for variant in ZucVariant:
        for mode in ("gxm", "mur"):
            for tau in tag_bits:
                for size in sizes:
                    key = AeadKey(h=stream.take(16), k=stream.take(variant.key_bytes))
                    nonce = stream.take(variant.iv_bytes)
                    aad = stream.take(size % 32)
                    pt = stream.take(size)
                    if mode == "gxm":
                        sealed = gxm_seal(GxmParams(variant, tau), key, nonce, aad, pt)
                    else:
                        sealed = mur_seal(MurParams(variant, tau), key, nonce, aad, pt)
                    out.append(
                        TestVector(
                            id=f"{variant.value}-{mode}-t{tau}-l{size}",
                            variant=variant.value,
                            mode=mode,
                            key_h=key.h.hex(),
                            key_k=key.k.hex(),
                            nonce=nonce.hex(),
                            aad=aad.hex(),
                            pt=pt.hex(),
                            ct=sealed.ciphertext.hex(),
                            tag=sealed.tag.hex(),
                            tag_len_bits=tau,
                        )
                    )
        master = stream.take(variant.key_bytes)
        iv0 = stream.take(variant.iv_bytes)
        derived = derive_key(variant, master, iv0)
        out.append(
            TestVector(
                id=f"{variant.value}-kdf",
                variant=variant.value,
                mode="kdf",
                key_k=master.hex(),
                nonce=iv0.hex(),
                ct=(derived.h + derived.k).hex(),
            )
        )
    return out
