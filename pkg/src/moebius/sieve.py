"""Segmented Moebius sieving.

mu(n) over a window [lo, hi] is produced segment by segment: multiples of p^2
are zeroed, each multiple of p flips the sign and divides p out of a running
cofactor, and whatever cofactor exceeding 1 survives the base primes is a
single prime > sqrt(hi) contributing one more sign flip.  Everything is plain
numpy on int8/int64 arrays; a full segment of 2^20 values costs a few
milliseconds.

Tables are immutable after construction and safe to share between threads.
They can be cached to disk in a 2-bit-packed binary format (see write_cache).
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from pathlib import Path
from typing import Iterator

import numpy as np

from .errors import CacheFormatError, CapacityError, DomainError

DEFAULT_SEGMENT = 1 << 20
#: refuse to materialize tables larger than this many values (int8 + temporaries)
MAX_TABLE_VALUES = 1 << 28

_CACHE_MAGIC = b"MOBS"
_CACHE_VERSION = 1


@lru_cache(maxsize=8)
def base_primes(limit: int) -> np.ndarray:
    """All primes <= limit, via a plain boolean Eratosthenes sieve."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p:: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


@dataclass(frozen=True)
class MobiusTable:
    """Contiguous block of mu(n) for n in [lo, hi], values in {-1, 0, +1}."""

    lo: int
    hi: int
    values: np.ndarray  # int8, length hi - lo + 1

    def __post_init__(self):
        if not (1 <= self.lo <= self.hi):
            raise DomainError(f"need 1 <= lo <= hi, got [{self.lo}, {self.hi}]")
        if len(self.values) != self.hi - self.lo + 1:
            raise ValueError("values length does not match [lo, hi]")

    def mu(self, n: int) -> int:
        if not (self.lo <= n <= self.hi):
            raise DomainError(f"n={n} outside table range [{self.lo}, {self.hi}]")
        return int(self.values[n - self.lo])

    def __len__(self) -> int:
        return self.hi - self.lo + 1


def _sieve_segment(lo: int, hi: int, primes: np.ndarray) -> np.ndarray:
    n = hi - lo + 1
    mob = np.ones(n, dtype=np.int8)
    cof = np.arange(lo, hi + 1, dtype=np.int64)
    if lo == 1:
        cof[0] = 1  # mu(1) = 1, no factors
    for p in primes:
        p = int(p)
        if p * p > hi:
            break
        start = ((lo + p - 1) // p) * p
        sl = slice(start - lo, None, p)
        mob[sl] = -mob[sl]
        cof[sl] //= p
        p2 = p * p
        start2 = ((lo + p2 - 1) // p2) * p2
        if start2 <= hi:
            mob[start2 - lo:: p2] = 0
    # a leftover cofactor > 1 is one extra prime factor > sqrt(hi)
    np.negative(mob, where=cof > 1, out=mob)
    return mob


def sieve_range(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT) -> MobiusTable:
    """Exact mu(n) for all n in [lo, hi]."""
    if not (1 <= lo <= hi):
        raise DomainError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if hi - lo + 1 > MAX_TABLE_VALUES:
        raise CapacityError(
            f"table of {hi - lo + 1} values exceeds the {MAX_TABLE_VALUES} budget; "
            "use iter_segments for streaming sweeps")
    primes = base_primes(isqrt(hi))
    out = np.empty(hi - lo + 1, dtype=np.int8)
    for seg_lo in range(lo, hi + 1, segment_size):
        seg_hi = min(seg_lo + segment_size - 1, hi)
        out[seg_lo - lo: seg_hi - lo + 1] = _sieve_segment(seg_lo, seg_hi, primes)
    return MobiusTable(lo, hi, out)


def iter_segments(lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT,
                  cache_dir: str | os.PathLike | None = None) -> Iterator[MobiusTable]:
    """Stream [lo, hi] as immutable tables of at most segment_size values.

    Segments are independent (safe to produce in parallel); this generator
    yields them in increasing order for prefix-dependent accumulation.
    """
    if not (1 <= lo <= hi):
        raise DomainError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    cached = _cache_lookup(cache_dir, lo, hi) if cache_dir else None
    if cached is not None:
        for seg_lo in range(lo, hi + 1, segment_size):
            seg_hi = min(seg_lo + segment_size - 1, hi)
            yield MobiusTable(seg_lo, seg_hi,
                              cached.values[seg_lo - cached.lo: seg_hi - cached.lo + 1])
        return
    primes = base_primes(isqrt(hi))
    for seg_lo in range(lo, hi + 1, segment_size):
        seg_hi = min(seg_lo + segment_size - 1, hi)
        yield MobiusTable(seg_lo, seg_hi, _sieve_segment(seg_lo, seg_hi, primes))


# ---------------------------------------------------------------------------
# Binary cache: magic "MOBS", version u32, lo u64, hi u64 (little-endian),
# then 2-bit codes packed 4 per byte, first value in the low-order bits.
# Codes: 00 -> 0, 01 -> +1, 11 -> -1 (10 is invalid).
# ---------------------------------------------------------------------------

_HEADER = struct.Struct("<4sIQQ")


def write_cache(table: MobiusTable, path: str | os.PathLike) -> None:
    codes = np.zeros(len(table), dtype=np.uint8)
    codes[table.values == 1] = 0b01
    codes[table.values == -1] = 0b11
    n = len(codes)
    padded = np.zeros((n + 3) // 4 * 4, dtype=np.uint8)
    padded[:n] = codes
    quads = padded.reshape(-1, 4)
    packed = (quads[:, 0] | (quads[:, 1] << 2) | (quads[:, 2] << 4)
              | (quads[:, 3] << 6)).astype(np.uint8)
    path = Path(path)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "wb") as fh:
        fh.write(_HEADER.pack(_CACHE_MAGIC, _CACHE_VERSION, table.lo, table.hi))
        fh.write(packed.tobytes())
    os.replace(tmp, path)


def read_cache(path: str | os.PathLike) -> MobiusTable:
    with open(path, "rb") as fh:
        header = fh.read(_HEADER.size)
        if len(header) != _HEADER.size:
            raise CacheFormatError(f"{path}: truncated header")
        magic, version, lo, hi = _HEADER.unpack(header)
        if magic != _CACHE_MAGIC:
            raise CacheFormatError(f"{path}: bad magic {magic!r}")
        if version != _CACHE_VERSION:
            raise CacheFormatError(f"{path}: unsupported version {version}")
        n = hi - lo + 1
        packed = np.frombuffer(fh.read(), dtype=np.uint8)
    if len(packed) < (n + 3) // 4:
        raise CacheFormatError(f"{path}: payload shorter than header claims")
    quads = np.empty((len(packed), 4), dtype=np.uint8)
    quads[:, 0] = packed & 0b11
    quads[:, 1] = (packed >> 2) & 0b11
    quads[:, 2] = (packed >> 4) & 0b11
    quads[:, 3] = (packed >> 6) & 0b11
    codes = quads.reshape(-1)[:n]
    if np.any(codes == 0b10):
        raise CacheFormatError(f"{path}: invalid 2-bit code 10")
    values = np.zeros(n, dtype=np.int8)
    values[codes == 0b01] = 1
    values[codes == 0b11] = -1
    return MobiusTable(int(lo), int(hi), values)


def cache_path(cache_dir: str | os.PathLike, lo: int, hi: int) -> Path:
    return Path(cache_dir) / f"mobs_{lo}_{hi}.bin"


def _cache_lookup(cache_dir, lo: int, hi: int) -> MobiusTable | None:
    """Find a cached table covering [lo, hi] in cache_dir, if any."""
    d = Path(cache_dir)
    if not d.is_dir():
        return None
    best = None
    for f in d.glob("mobs_*_*.bin"):
        try:
            _, s_lo, s_hi = f.stem.split("_")
            c_lo, c_hi = int(s_lo), int(s_hi)
        except ValueError:
            continue
        if c_lo <= lo and hi <= c_hi and (best is None or c_hi - c_lo < best[1] - best[0]):
            best = (c_lo, c_hi, f)
    if best is None:
        return None
    table = read_cache(best[2])
    return table


def build_cache(lo: int, hi: int, cache_dir: str | os.PathLike,
                segment_size: int = DEFAULT_SEGMENT) -> Path:
    """Sieve [lo, hi] and persist it; returns the file path."""
    table = sieve_range(lo, hi, segment_size)
    d = Path(cache_dir)
    d.mkdir(parents=True, exist_ok=True)
    path = cache_path(d, lo, hi)
    write_cache(table, path)
    return path
