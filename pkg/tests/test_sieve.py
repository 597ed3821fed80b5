import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from moebius.errors import CacheFormatError, CapacityError, DomainError
from moebius.sieve import (MobiusTable, build_cache, iter_segments, read_cache,
                           sieve_range, write_cache)
from oracles import FROZEN, mu_trial_division


def test_first_twelve():
    assert sieve_range(1, 12).values.tolist() == FROZEN["mu_1_12"]


def test_single_value_window():
    assert sieve_range(6, 6).values.tolist() == [1]  # 6 = 2*3
    assert sieve_range(49, 49).values.tolist() == [0]
    assert sieve_range(97, 97).values.tolist() == [-1]


def test_against_dirichlet_inverse_oracle(mu_oracle_5e4):
    table = sieve_range(1, 50_000)
    assert np.array_equal(table.values.astype(np.int64), mu_oracle_5e4[1:])


def test_primes_are_minus_one():
    table = sieve_range(1, 10_000)
    from moebius.sieve import base_primes
    for p in base_primes(10_000):
        assert table.mu(int(p)) == -1


def test_dirichlet_inverse_property_exhaustive():
    # sum_{d|n} mu(d) = [n == 1] for all n <= 1e4
    N = 10_000
    table = sieve_range(1, N)
    acc = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        acc[d::d] += table.mu(d)
    assert acc[1] == 1
    assert not np.any(acc[2:])


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=49_000), st.integers(min_value=1, max_value=900))
def test_windows_match_oracle(lo, span):
    hi = lo + span
    window = sieve_range(lo, hi)
    for n in (lo, (lo + hi) // 2, hi):
        assert window.mu(n) == mu_trial_division(n)


def test_segmented_equals_monolithic():
    whole = sieve_range(1, 30_000)
    stitched = np.concatenate([seg.values for seg in iter_segments(1, 30_000, 4096)])
    assert np.array_equal(whole.values, stitched)


def test_high_window_values():
    lo = 10**8
    window = sieve_range(lo, lo + 100)
    for off in (0, 1, 37, 100):
        assert window.mu(lo + off) == mu_trial_division(lo + off)


def test_domain_and_capacity_errors():
    with pytest.raises(DomainError):
        sieve_range(0, 10)
    with pytest.raises(DomainError):
        sieve_range(10, 5)
    with pytest.raises(CapacityError):
        sieve_range(1, 2**28 + 2)
    with pytest.raises(DomainError):
        MobiusTable(1, 2, np.zeros(2, dtype=np.int8)).mu(5)


# cache file format ----------------------------------------------------------

def test_cache_roundtrip(tmp_path):
    table = sieve_range(1, 10_001)  # non-multiple of 4 exercises padding
    path = tmp_path / "mobs_1_10001.bin"
    write_cache(table, path)
    back = read_cache(path)
    assert back.lo == 1 and back.hi == 10_001
    assert np.array_equal(back.values, table.values)


def test_cache_header_layout(tmp_path):
    table = sieve_range(5, 12)  # mu: -1, 1, -1, 0, 0, 1, -1, 0
    path = tmp_path / "c.bin"
    write_cache(table, path)
    raw = path.read_bytes()
    assert raw[:4] == b"MOBS"
    assert int.from_bytes(raw[4:8], "little") == 1
    assert int.from_bytes(raw[8:16], "little") == 5
    assert int.from_bytes(raw[16:24], "little") == 12
    # first byte packs mu(5..8) = -1,1,-1,0 -> codes 11,01,11,00 low bits first
    assert raw[24] == 0b00110111
    assert len(raw) == 24 + 2  # 8 values -> 2 bytes


def test_cache_rejects_corruption(tmp_path):
    table = sieve_range(1, 16)
    path = tmp_path / "c.bin"
    write_cache(table, path)
    raw = bytearray(path.read_bytes())
    raw[0:4] = b"XOBS"
    (tmp_path / "bad_magic.bin").write_bytes(raw)
    with pytest.raises(CacheFormatError):
        read_cache(tmp_path / "bad_magic.bin")
    raw = bytearray(path.read_bytes())
    raw[24] = 0b10  # invalid code
    (tmp_path / "bad_code.bin").write_bytes(raw)
    with pytest.raises(CacheFormatError):
        read_cache(tmp_path / "bad_code.bin")
    with pytest.raises(CacheFormatError):
        (tmp_path / "short.bin").write_bytes(path.read_bytes()[:20])
        read_cache(tmp_path / "short.bin")


def test_iter_segments_uses_cache(tmp_path):
    build_cache(1, 20_000, tmp_path)
    segs = list(iter_segments(1, 15_000, 4096, cache_dir=tmp_path))
    direct = sieve_range(1, 15_000)
    assert np.array_equal(np.concatenate([s.values for s in segs]), direct.values)
