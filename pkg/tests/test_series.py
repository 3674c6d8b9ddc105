import math

import pytest

from sqspiral.published import (FIG7_RATIOS, FIG14B_RATIOS, FIG15_CUM_ANGLES,
                                FIG15_DIFFS, FIB_ALPHAS_DEG, SAW_BRACKET)
from sqspiral.ratpoly import QuadraticPoly
from sqspiral.series import (AnalysisSeries, axis_crossings, fib_angle_series,
                             fib_area_ratio_series, fibonacci_numbers,
                             same_arm_angle_series, square_angle_series,
                             square_band_closed_form, square_band_ratio_series,
                             triangle_area)


def test_triangle_area():
    assert triangle_area(1) == 0.5
    assert triangle_area(4) == 1.0
    assert triangle_area(2) == pytest.approx(0.7071068, abs=1e-7)
    with pytest.raises(ValueError):
        triangle_area(0)


def test_band_ratios_match_published():
    series = square_band_ratio_series(60)
    for m, printed in FIG7_RATIOS.items():
        if m <= 60:
            assert series.value(m) == pytest.approx(printed, abs=1e-7)
    assert series.claimed_limit == 1.0
    with pytest.raises(ValueError):
        square_band_ratio_series(1)


def test_band_ratio_closed_form():
    series = square_band_ratio_series(120)
    for m in range(10, 120):
        assert series.value(m) == pytest.approx(square_band_closed_form(m), abs=1e-3)
    # eventually decreasing toward 1, roughly 1 + 2/M
    vals = [series.value(m) for m in range(5, 120)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert series.value(100) == pytest.approx(1 + 2 / 100, abs=1e-3)


def test_square_angle_series(table400):
    series = square_angle_series(table400, 18)
    expected = sum(math.atan(1 / math.sqrt(n)) for n in (1, 2, 3))
    assert series.value(1) == pytest.approx(expected, abs=1e-12)
    assert math.degrees(series.value(1)) == pytest.approx(110.264, abs=1e-3)
    assert series.claimed_limit == 2.0
    with pytest.raises(IndexError):
        square_angle_series(table400, 30)


def test_same_arm_angle_series(table400):
    series = same_arm_angle_series(table400, 16)
    for r, printed in FIG15_DIFFS.items():
        assert series.value(r) == pytest.approx(printed, abs=0.01)
    assert series.value(1) == pytest.approx(FIG15_CUM_ANGLES[1], abs=1e-4)
    assert series.claimed_limit == pytest.approx(16.225322921506073, abs=1e-9)


def test_fibonacci_numbers():
    assert fibonacci_numbers(7) == [1, 2, 3, 5, 8, 13, 21]


def test_fib_angles_match_published(table400):
    fib = fib_angle_series(table400, 11)
    for k, printed in enumerate(FIB_ALPHAS_DEG, 1):
        assert fib.alphas_deg.value(k) == pytest.approx(printed, abs=0.02)
    assert fib.alphas_deg.value(4) == pytest.approx(67.01, abs=0.01)
    assert fib.alphas_deg.value(6) == pytest.approx(111.40, abs=0.01)
    lo, hi = SAW_BRACKET
    assert lo < fib.step_ratios.value(9) < hi
    assert lo < fib.step_ratios.value(10) < hi
    # the cumulative variant is emitted too, still on its way down to sqrt(tau)
    assert fib.cumulative_ratios.value(10) > hi
    with pytest.raises(IndexError):
        fib_angle_series(table400, 13)


def test_fib_area_ratios_match_published():
    series = fib_area_ratio_series(6)
    for k, printed in enumerate(FIG14B_RATIOS, 1):
        assert series.value(k) == pytest.approx(printed, abs=1e-5)
    with pytest.raises(ValueError):
        fib_area_ratio_series(1)


def test_axis_crossings(table400):
    report = axis_crossings(table400, 6)
    assert report.crossings == (2, 18, 54, 110, 186, 282)
    assert report.poly == QuadraticPoly(10, -14, 6)
    assert set(report.second_diffs) == {20}
    assert report.angles_deg[0] == pytest.approx(45.0, abs=1e-9)
    assert report.angles_deg[1] == pytest.approx(4.78344235, abs=1e-4)
    assert report.notes() == []
    # every crossing is the angle-minimizing ray near its axis transit
    for w, n in enumerate(report.crossings[1:], 2):
        axis = (w - 1) * 2 * math.pi
        zone = [m for m in range(1, 400)
                if abs(table400.angle_of(m) - axis) < math.pi]
        assert n == min(zone, key=lambda m: abs(table400.angle_of(m) - axis))
    with pytest.raises(ValueError):
        axis_crossings(table400, 2)
    with pytest.raises(IndexError):
        axis_crossings(table400, 12)


def test_series_serialization():
    series = AnalysisSeries("demo", ((1, 0.5), (2, 0.25)), claimed_limit=0.0)
    csv = series.to_csv()
    assert csv.splitlines()[0] == "index,value"
    assert "1,0.500000000" in csv
    assert '"final_deviation": 0.25' in series.summary_json()
    with pytest.raises(KeyError):
        series.value(3)
