"""Throughput micro-benchmarks for keystream, GHASH, and the AEAD modes.

All numbers are machine-relative; nothing here participates in pass/fail
except the two directional assertions in the perf-smoke test suite (table
GHASH at least as fast as the bit-serial baseline, GXM at least as fast as
the two-pass MUR), which use these helpers.

Cells are measured one at a time to avoid interference: each cell runs a
calibrated number of iterations per run and reports the median MB/s over
``runs`` runs (MB = 10^6 bytes).
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable

from . import _backend
from .ghash import ghash, ghash_bitserial
from .gxm import AeadKey, GxmParams, gxm_seal, gxm_open
from .mur import MurParams, mur_seal, mur_open
from .zuc import ZucVariant, zuc_l

DEFAULT_SIZES = (64, 1500, 65536)
DEFAULT_RUNS = 7


@dataclass
class BenchRow:
    label: str
    variant: str
    size: int
    mbps: float


def measure_mbps(
    fn: Callable[[], None], nbytes: int, runs: int = DEFAULT_RUNS, min_time: float = 0.02
) -> float:
    """Median throughput of ``fn`` (which processes ``nbytes`` per call)."""
    fn()  # warm-up; also surfaces errors before timing
    start = time.perf_counter()
    fn()
    probe = time.perf_counter() - start
    iters = max(1, int(min_time / probe) if probe > 0 else 1)
    samples = []
    for _ in range(max(runs, 1)):
        start = time.perf_counter()
        for _ in range(iters):
            fn()
        elapsed = time.perf_counter() - start
        samples.append((nbytes * iters) / elapsed / 1e6 if elapsed > 0 else 0.0)
    return statistics.median(samples)


def _fixed_key(variant: ZucVariant) -> AeadKey:
    return AeadKey(h=bytes(range(16)), k=bytes(variant.key_bytes))


def _payload(size: int) -> bytes:
    return bytes(i & 0xFF for i in range(size))


def keystream_mbps(variant: ZucVariant, size: int, runs: int = DEFAULT_RUNS) -> float:
    key = bytes(variant.key_bytes)
    iv = bytes(variant.iv_bytes)
    return measure_mbps(lambda: zuc_l(variant, key, iv, size), size, runs)


def ghash_table_mbps(size: int, runs: int = DEFAULT_RUNS) -> float:
    h = bytes(range(16))
    data = _payload(size)
    return measure_mbps(lambda: ghash(h, b"", data), size, runs)


def ghash_bitserial_mbps(size: int, runs: int = DEFAULT_RUNS) -> float:
    h = bytes(range(16))
    data = _payload(size)
    return measure_mbps(lambda: ghash_bitserial(h, b"", data), size, runs)


def seal_mbps(variant: ZucVariant, mode: str, size: int, runs: int = DEFAULT_RUNS) -> float:
    key = _fixed_key(variant)
    nonce = bytes(variant.iv_bytes)
    pt = _payload(size)
    if mode == "gxm":
        params = GxmParams(variant)
        fn = lambda: gxm_seal(params, key, nonce, b"", pt)  # noqa: E731
    else:
        params = MurParams(variant)
        fn = lambda: mur_seal(params, key, nonce, b"", pt)  # noqa: E731
    return measure_mbps(fn, size, runs)


def open_mbps(variant: ZucVariant, mode: str, size: int, runs: int = DEFAULT_RUNS) -> float:
    key = _fixed_key(variant)
    nonce = bytes(variant.iv_bytes)
    pt = _payload(size)
    if mode == "gxm":
        params = GxmParams(variant)
        sealed = gxm_seal(params, key, nonce, b"", pt)
        fn = lambda: gxm_open(params, key, nonce, b"", sealed.ciphertext, sealed.tag)  # noqa: E731
    else:
        params = MurParams(variant)
        sealed = mur_seal(params, key, nonce, b"", pt)
        fn = lambda: mur_open(params, key, nonce, b"", sealed.ciphertext, sealed.tag)  # noqa: E731
    return measure_mbps(fn, size, runs)


def paired_seal_comparison(
    variant: ZucVariant, size: int, rounds: int = 30, iters: int = 10
) -> tuple[float, float]:
    """(GXM, MUR) seal throughput, measured interleaved.

    Alternating the two modes within each round and taking best-over-rounds
    cancels machine drift, which on shared hardware can exceed the real
    structural gap between the modes.
    """
    key = _fixed_key(variant)
    nonce = bytes(variant.iv_bytes)
    pt = _payload(size)
    gxm_params = GxmParams(variant)
    mur_params = MurParams(variant)

    def run(fn) -> float:
        start = time.perf_counter()
        for _ in range(iters):
            fn()
        return time.perf_counter() - start

    seal_g = lambda: gxm_seal(gxm_params, key, nonce, b"", pt)  # noqa: E731
    seal_m = lambda: mur_seal(mur_params, key, nonce, b"", pt)  # noqa: E731
    seal_g(), seal_m()
    best_g = min(run(seal_g) for _ in range(rounds))
    best_m = min(run(seal_m) for _ in range(rounds))
    # interleave a second pass so neither mode owns the quiet window
    for _ in range(rounds):
        best_g = min(best_g, run(seal_g))
        best_m = min(best_m, run(seal_m))
    to_mbps = lambda t: (size * iters) / t / 1e6 if t > 0 else 0.0  # noqa: E731
    return to_mbps(best_g), to_mbps(best_m)


def run_bench(
    sizes: Iterable[int] = DEFAULT_SIZES,
    runs: int = DEFAULT_RUNS,
    compare_backends: bool = True,
) -> list[BenchRow]:
    """The full grid. Sequential on purpose; see the module docstring."""
    rows: list[BenchRow] = []
    sizes = tuple(sizes)
    for variant in ZucVariant:
        for size in sizes:
            rows.append(
                BenchRow("keystream", variant.value, size, keystream_mbps(variant, size, runs))
            )
    for size in sizes:
        rows.append(BenchRow("ghash-table", "-", size, ghash_table_mbps(size, runs)))
        rows.append(BenchRow("ghash-bitserial", "-", size, ghash_bitserial_mbps(size, runs)))
    for variant in ZucVariant:
        for mode in ("gxm", "mur"):
            for size in sizes:
                rows.append(
                    BenchRow(f"seal-{mode}", variant.value, size, seal_mbps(variant, mode, size, runs))
                )
                rows.append(
                    BenchRow(f"open-{mode}", variant.value, size, open_mbps(variant, mode, size, runs))
                )
    if compare_backends and len(_backend.available_backends()) > 1:
        rows.extend(_pure_comparison_rows(sizes, runs))
    return rows


def _pure_comparison_rows(sizes: tuple[int, ...], runs: int) -> list[BenchRow]:
    # Same kernels through the pure-Python fallback, for the backend gap.
    from . import _pure

    rows = []
    for size in sizes:
        nwords = (size + 3) // 4
        fn = lambda: _pure.ZucCore(128, bytes(16), bytes(16)).read_words(nwords)  # noqa: E731
        rows.append(BenchRow("keystream[pure]", "zuc128", size, measure_mbps(fn, size, runs)))
        data = _payload(size + (-size % 16))
        core = _pure.GhashCore(bytes(range(16)))
        fn2 = lambda: core.fold(bytes(16), data)  # noqa: E731
        rows.append(BenchRow("ghash-table[pure]", "-", size, measure_mbps(fn2, size, runs)))
    return rows


def format_table(rows: list[BenchRow]) -> str:
    lines = [f"backend: {_backend.backend_name()}"]
    lines.append(f"{'operation':<20} {'variant':<14} {'bytes':>8} {'MB/s':>12}")
    lines.append("-" * 56)
    for r in rows:
        lines.append(f"{r.label:<20} {r.variant:<14} {r.size:>8} {r.mbps:>12.2f}")
    return "\n".join(lines)


def write_csv(rows: list[BenchRow], path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["operation", "variant", "size_bytes", "mbps", "backend"])
        for r in rows:
            writer.writerow([r.label, r.variant, r.size, f"{r.mbps:.3f}", _backend.backend_name()])
