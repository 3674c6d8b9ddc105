import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sqspiral.table import (CHUNK, CapacityError, build_table, load_table,
                            save_table, segment_angle, stream_cum_angles,
                            wrap_signed, TAU)


def test_segment_angle_values():
    assert segment_angle(1) == pytest.approx(math.pi / 4, abs=1e-15)
    assert segment_angle(3) == pytest.approx(math.pi / 6, abs=1e-15)
    # independent 40-digit arctan oracle: 0.0996686524911620273784461198780...
    assert segment_angle(100) == pytest.approx(0.09966865249116202, abs=2e-16)


def test_segment_angle_rejects_zero():
    with pytest.raises(ValueError):
        segment_angle(0)


@given(st.integers(min_value=1, max_value=10**9))
def test_segment_angle_range(n):
    a = segment_angle(n)
    assert 0 < a <= math.pi / 4
    assert segment_angle(n + 1) < a


def test_angle_of_reference_axis(table400):
    assert table400.angle_of(1) == 0.0


def test_angle_of_third_ray(table400):
    # 45 + 35.264 degrees
    assert math.degrees(table400.angle_of(3)) == pytest.approx(80.2644, abs=1e-3)


def test_ray_18_crosses_into_second_winding(table400):
    assert table400.angle_of(17) < TAU < table400.angle_of(18)
    assert table400.winding(18) == 2
    assert table400.winding(17) == 1


def test_cum_angle_strictly_increasing(table100k):
    assert np.all(np.diff(table100k.cum_angle) > 0)


def test_increments_match_segment_angle(table100k):
    ks = list(range(1, 2000)) + [CHUNK - 1, CHUNK, CHUNK + 1, 99999, 100000]
    for k in ks:
        inc = table100k.w(k) - table100k.w(k - 1)
        tol = 1e-14 * max(1.0, table100k.w(k))
        assert abs(inc - segment_angle(k)) <= tol


def test_c2_strictly_decreasing(table100k):
    ks = np.arange(1, table100k.max_n + 1)
    est = table100k.cum_angle[1:] - 2.0 * np.sqrt(ks)
    assert np.all(np.diff(est) < 0)


def test_term_comparison_underlying_decrease():
    # arctan(1/sqrt(k+1)) < 2*(sqrt(k+1) - sqrt(k)) makes c2(k) decrease
    for k in range(1, 5000):
        assert segment_angle(k + 1) < 2 * (math.sqrt(k + 1) - math.sqrt(k))


def test_build_deterministic_and_prefix_stable(table100k):
    again = build_table(100000)
    assert again.cum_angle.tobytes() == table100k.cum_angle.tobytes()
    small = build_table(1000)
    assert small.cum_angle.tobytes() == table100k.cum_angle[:1001].tobytes()


def test_plain_vs_compensated_gap():
    comp = build_table(10**6)
    plain = build_table(10**6, mode="plain")
    assert plain.built_with == "plain"
    assert abs(comp.w(10**6) - plain.w(10**6)) <= 1e-10


def test_build_rejects_bad_mode_and_capacity():
    with pytest.raises(ValueError):
        build_table(10, mode="fancy")
    with pytest.raises(CapacityError, match="budget"):
        build_table(10**6, capacity=1000)


def test_ray_coordinates(table400):
    ray1 = table400.ray(1)
    assert (ray1.x, ray1.y) == (1.0, 0.0)
    ray2 = table400.ray(2)
    assert ray2.x == pytest.approx(1.0, abs=1e-12)
    assert ray2.y == pytest.approx(1.0, abs=1e-12)
    for n in (2, 17, 18, 100, 399):
        ray = table400.ray(n)
        assert ray.radius ** 2 == pytest.approx(n, rel=1e-12)
        assert 0 <= ray.angle_mod < TAU
        assert ray.x ** 2 + ray.y ** 2 == pytest.approx(n, rel=1e-9)
        assert ray.winding == 1 + int(ray.angle_total // TAU)


def test_angle_of_range_check(table400):
    with pytest.raises(IndexError):
        table400.angle_of(402)
    assert table400.angle_of(401) == table400.w(400)


def test_wrap_signed_edges():
    assert wrap_signed(0.0) == 0.0
    assert wrap_signed(math.pi) == pytest.approx(math.pi)
    assert wrap_signed(-math.pi) == pytest.approx(math.pi)
    assert wrap_signed(3 * math.pi) == pytest.approx(math.pi)
    assert wrap_signed(TAU + 0.25) == pytest.approx(0.25, abs=1e-12)


@given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
def test_wrap_signed_properties(x):
    w = wrap_signed(x)
    assert -math.pi < w <= math.pi
    assert wrap_signed(x + TAU) == pytest.approx(w, abs=1e-7)


def test_stream_matches_table(table100k):
    ks = [0, 1, 2, CHUNK - 1, CHUNK, CHUNK + 5, 99999, 100000]
    streamed = stream_cum_angles(ks)
    for k in ks:
        assert streamed[k] == table100k.w(k)


def test_cache_round_trip(tmp_path, table400):
    path = str(tmp_path / "t.bin")
    save_table(table400, path)
    loaded = load_table(path)
    assert loaded.max_n == table400.max_n
    assert loaded.built_with == "compensated"
    assert loaded.cum_angle.tobytes() == table400.cum_angle.tobytes()
    save_table(table400, path)  # rewrite is byte-identical
    with open(path, "rb") as fh:
        first = fh.read()
    save_table(table400, path)
    with open(path, "rb") as fh:
        assert fh.read() == first


def test_cache_rejects_garbage(tmp_path):
    path = tmp_path / "bad.bin"
    path.write_bytes(b"NOPE" + b"\x00" * 16)
    with pytest.raises(ValueError, match="magic"):
        load_table(str(path))


def test_cache_refuses_plain_mode(tmp_path):
    plain = build_table(50, mode="plain")
    with pytest.raises(ValueError, match="compensated"):
        save_table(plain, str(tmp_path / "p.bin"))
