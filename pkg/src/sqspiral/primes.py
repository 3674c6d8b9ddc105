"""Primes on the spiral: sieve, prime-rich quadratic scan, arm report.

Primes cannot satisfy an exact quadratic recurrence, so prime "arms" are
traced with a density criterion instead of exact membership; the classic
prime-rich quadratics (second differential 18) avoid all values divisible
by 2 or 3, which `coprime6_check` proves by exact residue evaluation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .table import SpiralTable
from .ratpoly import QuadraticPoly

SIEVE_CAPACITY = 1 << 28


@dataclass(frozen=True)
class PrimalityTable:
    max_n: int
    bitmap: np.ndarray

    def is_prime(self, n: int) -> bool:
        return bool(self.bitmap[n])

    def count(self) -> int:
        return int(self.bitmap.sum())


def sieve(max_n: int) -> PrimalityTable:
    """Eratosthenes bitmap for 0..max_n."""
    if max_n < 2:
        raise ValueError("sieve needs max_n >= 2")
    if max_n > SIEVE_CAPACITY:
        raise MemoryError(f"sieve of {max_n} exceeds budget {SIEVE_CAPACITY}")
    bm = np.ones(max_n + 1, dtype=bool)
    bm[:2] = False
    for p in range(2, math.isqrt(max_n) + 1):
        if bm[p]:
            bm[p * p:: p] = False
    return PrimalityTable(max_n=max_n, bitmap=bm)


def coprime6_check(poly: QuadraticPoly) -> bool:
    """True iff no value of the polynomial is divisible by 2 or 3.

    Exact residue analysis: values of an integer-valued quadratic with
    half-integer coefficients repeat mod 2 with period 4 and mod 3 with
    period 12, so t = 1..12 covers every residue class.
    """
    if not poly.is_integer_valued():
        raise ValueError("coprime6_check needs an integer-valued polynomial")
    for t in range(1, 13):
        v = int(poly(t))
        if v % 2 == 0 or v % 3 == 0:
            return False
    return True


@dataclass(frozen=True)
class PolyDensityRow:
    poly: QuadraticPoly
    sample_count: int
    prime_count: int
    coprime6: bool

    @property
    def density(self) -> float:
        return self.prime_count / self.sample_count


def scan_prime_polys(second_differential: int, c_range, sample_count: int = 100
                     ) -> list[PolyDensityRow]:
    """Rank canonical quadratics with the given second differential by prime
    density over t = 1..sample_count.

    Enumerates b on the half-integer lattice in [0, 2a), c over c_range,
    keeping integer-valued polynomials with positive values; ties in density
    break on canonical (a, b, c) order.
    """
    if sample_count < 50:
        raise ValueError("sample_count must be >= 50")
    a = Fraction(second_differential, 2)
    c_lo, c_hi = min(c_range), max(c_range)
    top = int(a * sample_count * sample_count
              + (2 * a) * sample_count + abs(c_hi) + abs(c_lo)) + 1
    table = sieve(max(top, 2))
    rows = []
    b = Fraction(0) if a.denominator == 1 else Fraction(1, 2)
    while b < 2 * a:
        for c in range(c_lo, c_hi + 1):
            poly = QuadraticPoly(a, b, c)
            if not poly.is_integer_valued():
                break  # no integer c fixes a bad (a, b) parity
            vals = [int(poly(t)) for t in range(1, sample_count + 1)]
            if vals[0] < 1:
                continue
            hits = sum(1 for v in vals if table.is_prime(v))
            rows.append(PolyDensityRow(poly=poly, sample_count=sample_count,
                                       prime_count=hits,
                                       coprime6=coprime6_check(poly)))
        b += Fraction(1, 2)
    rows.sort(key=lambda r: (-r.prime_count,
                             r.poly.a, r.poly.b, r.poly.c))
    return rows


def pnt_baseline(second_differential: int, sample_count: int) -> float:
    """Prime-number-theorem density of primes near a*T^2."""
    a = second_differential / 2
    return 1.0 / math.log(a * sample_count * sample_count)


@dataclass(frozen=True)
class PrimeArm:
    members: tuple
    poly: QuadraticPoly           # canonical
    prime_count: int
    density: float
    coprime6: bool

    @property
    def second_differential(self) -> int:
        return int(2 * self.poly.a)


def _trace_dense(table: SpiralTable, is_prime, seed, max_n, threshold):
    """Trace a quadratic through a prime seed, tolerating composite values as
    long as the running prime density stays at or above the threshold."""
    from .arms import WINDOW_LO, WINDOW_HI
    m1, m2, m3 = seed
    d2 = m1 - 2 * m2 + m3
    if d2 <= 0:
        return None

    def window_ok(u, v):
        d = table.angle_of(v) - table.angle_of(u)
        return WINDOW_LO < d < WINDOW_HI

    if not (window_ok(m1, m2) and window_ok(m2, m3)):
        return None
    mem = [m1, m2, m3]
    hits = [True, True, True]
    while True:
        nxt = 2 * mem[-1] - mem[-2] + d2
        if nxt <= mem[-1] or nxt > max_n or not window_ok(mem[-1], nxt):
            break
        prime = is_prime(nxt)
        if (sum(hits) + prime) / (len(mem) + 1) < threshold:
            break
        mem.append(nxt)
        hits.append(prime)
    while hits and not hits[-1]:  # an arm ends on a prime
        hits.pop()
        mem.pop()
    if len(mem) < 5:
        return None
    count = sum(hits)
    if count / len(mem) < threshold:
        return None
    return tuple(mem), count


def prime_arm_report(table: SpiralTable, max_n: int,
                     density_threshold: float = 0.6,
                     second_differential: int | None = 18,
                     seed_bound: int | None = None) -> list[PrimeArm]:
    """Prime-rich arms found by density-relaxed tracing.

    Seeds are window-consistent prime triples; arms keep composite members
    only while their overall prime density stays >= the threshold.  With the
    default filter only arms of second differential 18 are reported, ranked
    by density then canonical polynomial.
    """
    from .ratpoly import newton_quadratic
    pt = sieve(max_n)
    ps = [int(i) for i in np.flatnonzero(pt.bitmap)]
    angles = np.array([table.angle_of(p) for p in ps])
    if seed_bound is None:
        seed_bound = max_n // 4
    from .arms import WINDOW_LO, WINDOW_HI
    found = {}
    for i, m1 in enumerate(ps):
        if m1 > seed_bound:
            break
        lo1 = int(np.searchsorted(angles, angles[i] + WINDOW_LO, side="right"))
        hi1 = int(np.searchsorted(angles, angles[i] + WINDOW_HI, side="left"))
        for j in range(lo1, hi1):
            m2 = ps[j]
            lo2 = int(np.searchsorted(angles, angles[j] + WINDOW_LO, side="right"))
            hi2 = int(np.searchsorted(angles, angles[j] + WINDOW_HI, side="left"))
            for k in range(lo2, hi2):
                m3 = ps[k]
                d2 = m1 - 2 * m2 + m3
                if d2 <= 0:
                    continue
                if second_differential is not None and d2 != second_differential:
                    continue
                res = _trace_dense(table, pt.is_prime, (m1, m2, m3), max_n,
                                   density_threshold)
                if res is None:
                    continue
                mem, count = res
                canon, _ = newton_quadratic(m1, m2, m3).canonicalize()
                key = (canon.a, canon.b, canon.c)
                if key not in found or len(mem) > len(found[key].members):
                    found[key] = PrimeArm(
                        members=mem, poly=canon, prime_count=count,
                        density=count / len(mem),
                        coprime6=coprime6_check(canon))
    return sorted(found.values(),
                  key=lambda r: (-r.density, r.poly.a, r.poly.b, r.poly.c))


def scan_csv(rows) -> str:
    lines = ["a,b_hat,c,T,prime_count,density,coprime6"]
    for r in rows:
        lines.append(f"{r.poly.a},{r.poly.b},{r.poly.c},{r.sample_count},"
                     f"{r.prime_count},{r.density:.6f},{str(r.coprime6).lower()}")
    return "\n".join(lines) + "\n"
