"""Command-line interface: seal/open files, dump keystream, selftest, bench.

Sealed file framing (all multi-byte integers big-endian):

    magic   8 bytes  b"ZUCAEAD1"
    variant 1 byte   1=zuc128, 2=zuc256-iv184, 3=zuc256-iv128
    mode    1 byte   1=gxm, 2=mur
    tag_len 2 bytes  tag length in bits
    nonce   v/8 bytes
    body    ciphertext (same length as the plaintext)
    trailer tag (tag_len/8 bytes)

Associated data is authenticated but never stored; supply the same AAD at
open time. Exit codes: 0 success, 1 authentication failure, 2 usage or
malformed input.
"""

from __future__ import annotations

import importlib.resources
import struct
import sys
import tempfile
from pathlib import Path

import click

from . import __version__, bench as _bench
from ._backend import backend_name
from .errors import AuthenticationFailure
from .gxm import AeadKey, GxmParams, gxm_open, gxm_seal
from .kdf import derive_key
from .mur import MurParams, mur_open, mur_seal
from .vectors import VectorFormatError, load_vectors, run_vector
from .zuc import ZucVariant, zuc_l

MAGIC = b"ZUCAEAD1"
_HEADER = struct.Struct(">8sBBH")

_VARIANT_IDS = {
    ZucVariant.ZUC128: 1,
    ZucVariant.ZUC256_IV184: 2,
    ZucVariant.ZUC256_IV128: 3,
}
_VARIANT_BY_ID = {v: k for k, v in _VARIANT_IDS.items()}
_MODE_IDS = {"gxm": 1, "mur": 2}
_MODE_BY_ID = {v: k for k, v in _MODE_IDS.items()}

_VARIANT_NAMES = [v.value for v in ZucVariant]


def _hex_option(value: str | None, flag: str, allow_empty: bool = False) -> bytes:
    if value is None:
        value = ""
    if not value and not allow_empty:
        raise click.UsageError(f"{flag} must not be empty")
    try:
        return bytes.fromhex(value)
    except ValueError:
        raise click.UsageError(f"{flag} is not valid hex")


def _resolve_keys(
    variant: ZucVariant,
    key_h: str | None,
    key_k: str | None,
    derive: bool,
    master_key: str | None,
    iv0: str | None,
) -> AeadKey:
    explicit = key_h is not None or key_k is not None
    if derive:
        if explicit:
            raise click.UsageError("--derive replaces --key-h/--key-k; supply only one form")
        if master_key is None:
            raise click.UsageError("--derive requires --master-key")
        master = _hex_option(master_key, "--master-key")
        iv0_bytes = _hex_option(iv0, "--iv0") if iv0 is not None else None
        try:
            return derive_key(variant, master, iv0_bytes)
        except ValueError as exc:
            raise click.UsageError(str(exc))
    if master_key is not None or iv0 is not None:
        raise click.UsageError("--master-key/--iv0 require --derive")
    if key_h is None or key_k is None:
        raise click.UsageError("supply both --key-h and --key-k (or use --derive)")
    return AeadKey(h=_hex_option(key_h, "--key-h"), k=_hex_option(key_k, "--key-k"))


def _read_aad(aad: str | None, aad_file: str | None) -> bytes:
    if aad is not None and aad_file is not None:
        raise click.UsageError("--aad and --aad-file are mutually exclusive")
    if aad_file is not None:
        try:
            return Path(aad_file).read_bytes()
        except OSError as exc:
            raise click.UsageError(f"cannot read AAD file: {exc}")
    return _hex_option(aad, "--aad", allow_empty=True)


def _params(variant: ZucVariant, mode: str, tag_bits: int):
    try:
        if mode == "gxm":
            return GxmParams(variant, tag_bits)
        return MurParams(variant, tag_bits)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _keys_options(fn):
    fn = click.option("--key-h", metavar="HEX", help="128-bit GHASH key (hex).")(fn)
    fn = click.option("--key-k", metavar="HEX", help="ZUC key (hex), length per variant.")(fn)
    fn = click.option("--derive", is_flag=True, help="Derive both keys from --master-key.")(fn)
    fn = click.option("--master-key", metavar="HEX", help="Master key for --derive.")(fn)
    fn = click.option(
        "--iv0", metavar="HEX", help="Derivation IV (system parameter); all zeros by default."
    )(fn)
    return fn


@click.group()
@click.version_option(__version__, message=f"%(prog)s %(version)s (backend: {backend_name()})")
def main() -> None:
    """Authenticated encryption with the ZUC family (GXM and MUR modes).

    GXM is nonce-based: it fails catastrophically if a nonce is ever
    repeated under the same key, so nonce uniqueness is entirely the
    operator's responsibility. MUR is nonce-misuse-resistant: repeating a
    nonce only reveals whether the whole (nonce, AAD, plaintext) triple
    repeated. When using MUR with unique nonces, prefer nonces whose low
    (v - tag_bits) bits do not repeat.
    """


@main.command("seal")
@click.option("--mode", type=click.Choice(["gxm", "mur"]), required=True)
@click.option("--variant", type=click.Choice(_VARIANT_NAMES), required=True)
@_keys_options
@click.option("--nonce", metavar="HEX", required=True, help="Nonce of v/8 bytes (hex).")
@click.option("--aad", metavar="HEX", default=None, help="Associated data (hex).")
@click.option("--aad-file", metavar="PATH", default=None, help="Associated data from a file.")
@click.option("--tag-bits", type=int, default=128, show_default=True)
@click.option("--in", "in_path", metavar="PATH", required=True, help="Plaintext input file.")
@click.option("--out", "out_path", metavar="PATH", required=True, help="Sealed output file.")
def cmd_seal(mode, variant, key_h, key_k, derive, master_key, iv0, nonce, aad, aad_file,
             tag_bits, in_path, out_path):
    """Encrypt and authenticate a file into the sealed frame format.

    The nonce is stored in the frame header (it is public); AAD is not
    stored and must be supplied again at open time. For --mode gxm the
    nonce MUST be unique per key.
    """
    var = ZucVariant.from_name(variant)
    params = _params(var, mode, tag_bits)
    key = _resolve_keys(var, key_h, key_k, derive, master_key, iv0)
    nonce_b = _hex_option(nonce, "--nonce")
    aad_b = _read_aad(aad, aad_file)
    try:
        plaintext = Path(in_path).read_bytes()
    except OSError as exc:
        raise click.UsageError(f"cannot read input: {exc}")
    try:
        if mode == "gxm":
            sealed = gxm_seal(params, key, nonce_b, aad_b, plaintext)
        else:
            sealed = mur_seal(params, key, nonce_b, aad_b, plaintext)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    header = _HEADER.pack(MAGIC, _VARIANT_IDS[var], _MODE_IDS[mode], tag_bits)
    try:
        Path(out_path).write_bytes(header + nonce_b + sealed.ciphertext + sealed.tag)
    except OSError as exc:
        raise click.UsageError(f"cannot write output: {exc}")


@main.command("open")
@click.option("--variant", type=click.Choice(_VARIANT_NAMES), default=None,
              help="Expected variant; defaults to the frame header.")
@_keys_options
@click.option("--aad", metavar="HEX", default=None, help="Associated data (hex).")
@click.option("--aad-file", metavar="PATH", default=None, help="Associated data from a file.")
@click.option("--in", "in_path", metavar="PATH", required=True, help="Sealed input file.")
@click.option("--out", "out_path", metavar="PATH", required=True, help="Plaintext output file.")
def cmd_open(variant, key_h, key_k, derive, master_key, iv0, aad, aad_file, in_path, out_path):
    """Verify and decrypt a sealed file.

    Exits 1 (writing nothing) if authentication fails; a partial output
    file is never left behind.
    """
    try:
        blob = Path(in_path).read_bytes()
    except OSError as exc:
        raise click.UsageError(f"cannot read input: {exc}")
    if len(blob) < _HEADER.size:
        raise click.UsageError("input is too short to be a sealed frame")
    magic, variant_id, mode_id, tag_bits = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise click.UsageError("input is not a sealed frame (bad magic)")
    if variant_id not in _VARIANT_BY_ID or mode_id not in _MODE_BY_ID:
        raise click.UsageError("unknown variant or mode id in frame header")
    var = _VARIANT_BY_ID[variant_id]
    mode = _MODE_BY_ID[mode_id]
    if variant is not None and var.value != variant:
        raise click.UsageError(f"frame is {var.value}, not the requested {variant}")
    params = _params(var, mode, tag_bits)
    body = blob[_HEADER.size:]
    if len(body) < var.iv_bytes + params.tag_bytes:
        raise click.UsageError("sealed frame is truncated")
    nonce_b = body[: var.iv_bytes]
    ciphertext = body[var.iv_bytes : len(body) - params.tag_bytes]
    tag = body[len(body) - params.tag_bytes :]
    key = _resolve_keys(var, key_h, key_k, derive, master_key, iv0)
    aad_b = _read_aad(aad, aad_file)
    try:
        if mode == "gxm":
            plaintext = gxm_open(params, key, nonce_b, aad_b, ciphertext, tag)
        else:
            plaintext = mur_open(params, key, nonce_b, aad_b, ciphertext, tag)
    except AuthenticationFailure:
        click.echo("error: authentication failure", err=True)
        sys.exit(1)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    # Write-then-rename so a crash can never leave partial plaintext.
    out = Path(out_path)
    try:
        with tempfile.NamedTemporaryFile(
            dir=out.parent or Path("."), prefix=out.name + ".", delete=False
        ) as tmp:
            tmp.write(plaintext)
            tmp_path = Path(tmp.name)
        tmp_path.replace(out)
    except OSError as exc:
        raise click.UsageError(f"cannot write output: {exc}")


@main.command("keystream")
@click.option("--variant", type=click.Choice(_VARIANT_NAMES), required=True)
@click.option("--key-k", metavar="HEX", required=True, help="ZUC key (hex).")
@click.option("--nonce", metavar="HEX", required=True, help="IV of v/8 bytes (hex).")
@click.option("--len-bytes", type=int, required=True, help="Keystream length in bytes.")
def cmd_keystream(variant, key_k, nonce, len_bytes):
    """Print raw keystream as lowercase hex (single shot, forward-only)."""
    var = ZucVariant.from_name(variant)
    try:
        stream = zuc_l(var, _hex_option(key_k, "--key-k"), _hex_option(nonce, "--nonce"), len_bytes)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(stream.hex())


def _default_vector_files() -> list[Path]:
    data = importlib.resources.files("zucaead") / "data"
    return [Path(str(data / "zuc_official.jsonl")), Path(str(data / "aead_corpus.jsonl"))]


@main.command("selftest")
@click.option("--vectors", "vector_paths", metavar="PATH", multiple=True,
              help="Vector file(s); defaults to the packaged corpus.")
@click.option("--quiet", is_flag=True, help="Only report failures and the summary.")
def cmd_selftest(vector_paths, quiet):
    """Run known-answer vectors; nonzero exit on any failure."""
    paths = [Path(p) for p in vector_paths] or _default_vector_files()
    failures = 0
    total = 0
    for path in paths:
        try:
            vecs = list(load_vectors(path))
        except OSError as exc:
            click.echo(f"error: cannot read vectors: {exc}", err=True)
            sys.exit(2)
        except VectorFormatError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        for vec in vecs:
            try:
                report = run_vector(vec)
            except VectorFormatError as exc:
                click.echo(f"error: {exc}", err=True)
                sys.exit(2)
            total += 1
            if not report.passed:
                failures += 1
                click.echo(report.describe())
            elif not quiet:
                click.echo(report.describe())
    click.echo(f"{total - failures}/{total} vectors passed")
    if failures:
        sys.exit(1)


@main.command("bench")
@click.option("--sizes", default="64,1500,65536", show_default=True,
              help="Comma-separated message sizes in bytes.")
@click.option("--runs", type=int, default=_bench.DEFAULT_RUNS, show_default=True)
@click.option("--csv", "csv_path", metavar="PATH", default=None, help="Also write CSV.")
def cmd_bench(sizes, runs, csv_path):
    """Measure throughput (informational; one configuration at a time)."""
    try:
        size_list = [int(s) for s in sizes.split(",") if s.strip()]
        if not size_list or any(s < 0 for s in size_list):
            raise ValueError
    except ValueError:
        raise click.UsageError("--sizes must be a comma-separated list of sizes in bytes")
    rows = _bench.run_bench(size_list, runs=runs)
    click.echo(_bench.format_table(rows))
    if csv_path:
        try:
            _bench.write_csv(rows, csv_path)
        except OSError as exc:
            click.echo(f"error: cannot write CSV: {exc}", err=True)
            sys.exit(2)


if __name__ == "__main__":
    main()
