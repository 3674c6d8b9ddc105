"""Asymptotic constants of the spiral: c2, winding distances, Archimedean law.

The cumulative angle satisfies w(k) = 2*sqrt(k) + c2(k) with c2(k) decreasing
toward the spiral constant c2 = -2.157782996659...; the correction series runs
in half-integer powers of 1/k (leading term (7/6)/sqrt(k)), which is what the
Richardson extrapolation below exploits.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .table import TAU, SpiralTable

#: Spiral constant as published (12 decimals).
C2_PUBLISHED = -2.157782996659


def c2_estimate(table: SpiralTable, k: int) -> float:
    """w(k) - 2*sqrt(k); converges to the spiral constant from above."""
    if not 1 <= k <= table.max_n:
        raise IndexError(f"k={k} outside table range 1..{table.max_n}")
    return table.w(k) - 2.0 * math.sqrt(k)


def c2_extrapolate(table: SpiralTable, sample_ks) -> float:
    """Richardson-extrapolate c2 from samples c2(k) at geometrically spaced k.

    Model: c2(k) = c2 + alpha*x + beta*x^2 + gamma*x^3 with x = k^(-1/2).
    Four samples interpolate exactly; more are fit by least squares.
    """
    ks = sorted(int(k) for k in sample_ks)
    if len(ks) < 4:
        raise ValueError("need at least 4 sample points")
    for a, b in zip(ks, ks[1:]):
        if b < 2 * a:
            raise ValueError(
                f"ill-conditioned spacing: consecutive samples {a}, {b} have ratio < 2")
    x = np.array([1.0 / math.sqrt(k) for k in ks])
    y = np.array([c2_estimate(table, k) for k in ks])
    design = np.vander(x, 4, increasing=True)
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return float(coef[0])


def archimedean_radius(phi: float, c2: float) -> float:
    """Asymptotic radius law r(phi) = phi/2 - c2/2."""
    if phi < 0:
        raise ValueError("phi must be >= 0")
    return 0.5 * phi - 0.5 * c2


@dataclass(frozen=True)
class WindingRow:
    """One probe of the winding distance: ray m lies ~one full turn past ray n."""

    n: int
    m: int
    distance: float
    winding: int  # winding index of ray m
    gap: float    # (angle_of(m) - angle_of(n)) - 2*pi


def nearest_one_turn(table: SpiralTable, n: int):
    """Ray m minimizing |(angle_of(m) - angle_of(n)) - 2*pi|, or None near table end."""
    target = table.angle_of(n) + TAU
    limit = table.max_n + 1
    # No m within 2*pi + pi/2 of the probe: skip (probe too close to table end).
    if target > float(table.cum_angle[limit - 1]) + 0.5 * math.pi:
        return None
    j = int(np.searchsorted(table.cum_angle[:limit], target))
    best_m, best_gap = None, None
    for m in (j, j + 1):
        if n < m <= limit:
            gap = (table.angle_of(m) - table.angle_of(n)) - TAU
            if best_gap is None or abs(gap) < abs(best_gap):
                best_m, best_gap = m, gap
    if best_m is None or target > table.angle_of(min(best_m, limit)) + 0.5 * math.pi:
        return None
    return best_m, best_gap


def winding_distance_table(table: SpiralTable, probes=None,
                           max_winding: int | None = None) -> list[WindingRow]:
    """Winding-distance rows sqrt(m) - sqrt(n) for each probe ray n.

    Default probes are all n >= 1; probes whose successor search runs off the
    table end are skipped.  Distances tend to pi as the winding grows.
    """
    if probes is None:
        probes = range(1, table.max_n + 1)
    rows = []
    for n in probes:
        hit = nearest_one_turn(table, n)
        if hit is None:
            continue
        m, gap = hit
        wind = table.winding(m)
        if max_winding is not None and wind > max_winding:
            break
        rows.append(WindingRow(n=n, m=m, distance=math.sqrt(m) - math.sqrt(n),
                               winding=wind, gap=gap))
    return rows


def winding_averages(rows, fold_at: int | None = None) -> dict[int, float]:
    """Arithmetic mean distance per winding; windings >= fold_at pool together."""
    sums: dict[int, float] = {}
    counts: dict[int, int] = {}
    for row in rows:
        w = row.winding if fold_at is None else min(row.winding, fold_at)
        sums[w] = sums.get(w, 0.0) + row.distance
        counts[w] = counts.get(w, 0) + 1
    return {w: sums[w] / counts[w] for w in sorted(sums)}


@dataclass(frozen=True)
class ConstantsReport:
    """c2 diagnostics plus the winding-distance reproduction rows."""

    c2_raw_at: dict[int, float]
    c2_extrapolated: float
    pi_winding_table: list[WindingRow] = field(default_factory=list)

    def winding_table_csv(self) -> str:
        lines = ["n,m,distance,winding,winding_avg"]
        avgs = winding_averages(self.pi_winding_table)
        for row in self.pi_winding_table:
            lines.append(f"{row.n},{row.m},{row.distance:.6f},{row.winding},"
                         f"{avgs[row.winding]:.7f}")
        return "\n".join(lines) + "\n"


def constants_report(table: SpiralTable, sample_ks, probes) -> ConstantsReport:
    return ConstantsReport(
        c2_raw_at={k: c2_estimate(table, k) for k in sample_ks},
        c2_extrapolated=c2_extrapolate(table, sample_ks),
        pi_winding_table=winding_distance_table(table, probes=probes),
    )
