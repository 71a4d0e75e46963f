import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shortprod.arith import mod_distance
from shortprod.errors import DomainError
from shortprod.extrema import (
    ExtremumRun,
    decode,
    find_extrema_with_offset,
    find_min_max,
    gaps,
)
from shortprod.oracle import oracle_extrema


def running_extrema(z, m):
    """Brute force: (location, value, kind) for w = 1 .. first zero remainder."""
    out = []
    lo = hi = None
    w = 1
    while True:
        v = w * z % m
        if lo is None or v < lo:
            lo = v
            out.append((w, v, "min"))
        if hi is None or v > hi:
            hi = v
            out.append((w, v, "max"))
        if v == 0:
            return out
        w += 1


def coprime_free_pairs(zmax, mmax):
    for m in range(2, mmax + 1):
        for z in range(1, zmax + 1):
            if z % m:
                yield z, m


def test_gaps_trace():
    assert gaps(3, 8) == [1, 2, 3, 5]


def test_gaps_unit_multiplier():
    assert gaps(1, 8) == [1, 7]


def test_gaps_reduces_multiplier():
    assert gaps(11, 8) == gaps(3, 8) == [1, 2, 3, 5]


@pytest.mark.parametrize("z, m", [(8, 8), (16, 8), (0, 5)])
def test_gaps_rejects_multiples(z, m):
    with pytest.raises(DomainError, match="multiple of the modulus"):
        gaps(z, m)


def test_gaps_rejects_small_modulus():
    with pytest.raises(DomainError):
        gaps(1, 1)


def test_gaps_shape():
    for z, m in coprime_free_pairs(60, 60):
        g = gaps(z, m)
        assert g[0] == 1
        assert all(x < y for x, y in zip(g, g[1:]))


def test_gap_coverage():
    for z, m in coprime_free_pairs(128, 128):
        g = gaps(z, m)
        locs = sorted({w for w, _, _ in running_extrema(z, m)})
        diffs = [b - a for a, b in zip(locs, locs[1:])]
        assert set(diffs) <= set(g), (z, m)
        assert diffs == sorted(diffs), (z, m)


def test_distance_to_zero_never_grows_at_gap_locations():
    for z, m in coprime_free_pairs(128, 128):
        dist = [mod_distance(0, g * z % m, m) for g in gaps(z, m)]
        assert all(a >= b for a, b in zip(dist, dist[1:])), (z, m)


def test_distance_to_zero_can_grow_inside_first_run():
    # 1, 2, 3, 0 mod 4: the maximum at w = 2 sits farther from zero than w = 1
    ext = running_extrema(1, 4)
    assert [mod_distance(0, v, 4) for _, v, _ in ext] == [1, 1, 2, 1, 0]


def test_gaps_length_bound():
    for z, m in coprime_free_pairs(128, 128):
        assert len(gaps(z, m)) <= 2 * math.ceil(math.log2(m)) + 2


@given(st.integers(2, 2**64), st.data())
def test_gaps_length_bound_large(m, data):
    z = data.draw(st.integers(1, m - 1))
    assert len(gaps(z, m)) <= 2 * (m - 1).bit_length() + 2


def test_next_extremum_at_sum_of_last_two():
    for z, m in coprime_free_pairs(50, 50):
        period = m // math.gcd(z, m)
        alpha = beta = 1
        for w in range(2, period):
            v = w * z % m
            prev = [x * z % m for x in range(1, w)]
            is_max, is_min = v > max(prev), v < min(prev)
            if not (is_max or is_min):
                continue
            assert w == alpha + beta, (z, m, w)
            assert is_max == (v > beta * z % m)
            if is_max:
                beta = w
            else:
                alpha = w


def test_permutation_when_coprime():
    for m in range(2, 80):
        for z in range(1, m):
            if math.gcd(z, m) == 1:
                assert sorted(w * z % m for w in range(1, m)) == list(range(1, m))


def test_offset_single_point():
    assert find_extrema_with_offset(3, 8, 0, 0) == ([(0, 0, 0)], [(0, 0, 0)])


def test_offset_unit_multiplier():
    minima, maxima = find_extrema_with_offset(1, 8, 0, 7)
    assert decode(maxima) == list(range(8))
    assert decode(minima) == [0]
    assert maxima == [(0, 0, 0), (7, 6, 1)]


def test_offset_seven_from_w0():
    # values 7, 2, 5, 0, 3, 6, 1, 4, 7: w = 0 already holds the top value
    minima, maxima = find_extrema_with_offset(3, 8, 7, 8)
    assert decode(maxima) == [0]
    assert decode(minima) == [0, 1, 3]


def test_offset_seven_from_w1():
    # same sequence, scanning from w = 1: 2, 5, 0, 3, 6, 1, 4, 7
    minima, maxima = find_extrema_with_offset(3, 8, 7 + 3, 7)
    assert [w + 1 for w in decode(maxima)] == [1, 2, 5, 8]
    assert [(7 + (w + 1) * 3) % 8 for w in decode(maxima)] == [2, 5, 6, 7]
    assert [w + 1 for w in decode(minima)] == [1, 3]
    assert (7 + 3 * 3) % 8 == 0


def test_find_min_max_table():
    minima, maxima = find_min_max(3, 8, 1, 7)
    assert minima == [(1, 0, 0), (3, 0, 1)]
    assert maxima == [(1, 0, 0), (2, 0, 1), (5, 0, 2)]
    assert decode(minima) == [1, 3]
    assert decode(maxima) == [1, 2, 5]


def test_find_min_max_unit_multiplier():
    minima, maxima = find_min_max(1, 8, 1, 7)
    assert maxima == [(1, 0, 0), (7, 5, 1)]
    assert decode(maxima) == list(range(1, 8))
    assert decode(minima) == [1]


def test_find_min_max_single_point():
    assert find_min_max(3, 8, 4, 4) == ([(4, 0, 0)], [(4, 0, 0)])


def test_find_min_max_bad_interval():
    with pytest.raises(DomainError):
        find_min_max(3, 8, 5, 4)
    with pytest.raises(DomainError):
        find_min_max(8, 8, 1, 4)


def test_run_decoding():
    assert ExtremumRun(10, 3, 2).locations() == [4, 6, 8, 10]
    assert ExtremumRun(5, 0, 0).locations() == [5]


def _check_against_oracle(z, m, A, B):
    minima, maxima = find_min_max(z, m, A, B)
    mins, maxs = oracle_extrema(z, m, A * z, B - A)
    assert [(w, w * z % m) for w in decode(minima)] == [(w + A, v) for w, v in mins]
    assert [(w, w * z % m) for w in decode(maxima)] == [(w + A, v) for w, v in maxs]


def test_find_min_max_matches_oracle_small_grid():
    for z, m in coprime_free_pairs(40, 40):
        for A in (1, 2, m // 2 + 1):
            _check_against_oracle(z, m, A, A + min(2 * m, 64))


@settings(max_examples=300)
@given(st.integers(2, 5000), st.data())
def test_offset_extrema_match_oracle(m, data):
    z = data.draw(st.integers(1, 10**6).filter(lambda x: x % m))
    offset = data.draw(st.integers(0, 10**9))
    w_max = data.draw(st.integers(0, 3000))
    minima, maxima = find_extrema_with_offset(z, m, offset, w_max)
    mins, maxs = oracle_extrema(z, m, offset, w_max)
    assert decode(minima) == [w for w, _ in mins]
    assert decode(maxima) == [w for w, _ in maxs]


def test_runs_are_arithmetic_progressions():
    for z, m in coprime_free_pairs(48, 48):
        for A in (1, 3, m):
            minima, maxima = find_min_max(z, m, A, A + 3 * m)
            for runs, sign in ((minima, -1), (maxima, 1)):
                for run in runs:
                    vals = [w * z % m for w in run.locations()]
                    steps = {b - a for a, b in zip(vals, vals[1:])}
                    assert len(steps) <= 1
                    assert all(sign * s > 0 for s in steps)


def test_huge_modulus():
    m = 10**40 + 7
    z = 5**50
    minima, maxima = find_min_max(z, m, 10**12, 10**12 + 5000)
    mins, maxs = oracle_extrema(z, m, 10**12 * z, 5000)
    assert decode(maxima) == [w + 10**12 for w, _ in maxs]
    assert decode(minima) == [w + 10**12 for w, _ in mins]
