"""Exact rational quadratics: difference tables, Newton fit, shift, canonical form.

Spiral arms are integer sequences generated by a*t^2 + b*t + c with exact
rational (in practice half-integer) coefficients.  Everything here is pure
Fraction arithmetic; floats only appear in the asymptotic spiral angle.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .table import TAU, wrap_signed

Rational = Fraction


class NotQuadraticError(ValueError):
    """Sequence is not quadratic-consistent; `index` locates the first bad
    second difference."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class DifferenceTable:
    level0: tuple
    level1: tuple
    level2: tuple
    level3: tuple


def difference_table(seq) -> DifferenceTable:
    """Exact forward differences down to the third level."""
    seq = tuple(seq)
    if len(seq) < 2:
        raise ValueError("need at least 2 values to difference")
    levels = [seq]
    for _ in range(3):
        prev = levels[-1]
        levels.append(tuple(b - a for a, b in zip(prev, prev[1:])))
    return DifferenceTable(*levels)


def second_differential(seq) -> int:
    """The constant second difference of a quadratic-consistent sequence."""
    seq = tuple(seq)
    if len(seq) < 4:
        raise ValueError("need at least 4 values to confirm a constant second difference")
    tab = difference_table(seq)
    for i, d in enumerate(tab.level2):
        if d != tab.level2[0]:
            raise NotQuadraticError(
                f"not quadratic-consistent: second difference changes at index {i}", i)
    return tab.level2[0]


def _rat(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class QuadraticPoly:
    """a*x^2 + b*x + c with exact rational coefficients."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _rat(self.a))
        object.__setattr__(self, "b", _rat(self.b))
        object.__setattr__(self, "c", _rat(self.c))

    def __call__(self, t) -> Fraction:
        t = _rat(t)
        return self.a * t * t + self.b * t + self.c

    def eval(self, t) -> Fraction:
        return self(t)

    def is_integer_valued(self) -> bool:
        """True iff every value at integer t is an integer (2a, a+b, c integers)."""
        return ((2 * self.a).denominator == 1
                and (self.a + self.b).denominator == 1
                and self.c.denominator == 1)

    def shift(self, s: int) -> "QuadraticPoly":
        """Polynomial q with q(t) = p(t+s)."""
        return QuadraticPoly(self.a, self.b + 2 * self.a * s,
                             self.c + self.a * s * s + self.b * s)

    def canonicalize(self) -> tuple["QuadraticPoly", int]:
        """Shift-equivalent form with b in [0, 2a); unique per value sequence."""
        if self.a <= 0:
            raise ValueError("canonical form needs a > 0 (not an arm polynomial)")
        s = -(self.b // (2 * self.a))
        s = int(s)
        return self.shift(s), s

    def __str__(self) -> str:
        def coeff(q: Fraction) -> str:
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

        def signed(q: Fraction) -> str:
            return f"- {coeff(-q)}" if q < 0 else f"+ {coeff(q)}"

        return f"{coeff(self.a)}*x^2 {signed(self.b)}*x {signed(self.c)}"


_TERM = r"([+-]?\s*\d+(?:/\d+|\.\d+)?)"
_POLY_RE = re.compile(
    rf"^\s*{_TERM}\s*\*?\s*x\^2\s*{_TERM}\s*\*?\s*x\s*{_TERM}\s*$")


def parse_poly(text: str) -> QuadraticPoly:
    """Parse `a*x^2 + b*x + c` (rationals as p/q, integers, or decimals)."""
    m = _POLY_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse polynomial {text!r}")
    parts = [Fraction(g.replace(" ", "")) for g in m.groups()]
    return QuadraticPoly(*parts)


def newton_quadratic(f1, f2, f3) -> QuadraticPoly:
    """Unique quadratic through (1,f1), (2,f2), (3,f3), by divided differences.

    N(t) = f1 + (t-1)*(f2-f1) + (t-1)(t-2)*(f1 - 2 f2 + f3)/2.
    """
    f1, f2, f3 = _rat(f1), _rat(f2), _rat(f3)
    a = (f1 - 2 * f2 + f3) / 2
    b = (f2 - f1) - 3 * a
    c = f1 - a - b
    return QuadraticPoly(a, b, c)


class SpiralAngle(NamedTuple):
    angle: float      # 2*sqrt(a) mod 2*pi, in [0, 2*pi)
    drift: float      # reduced to (-pi, pi]; 0.0 in the degenerate case
    degenerate: bool  # 2*sqrt(a) lands on a multiple of pi (sub-period alignment)


def limit_spiral_angle(p) -> SpiralAngle:
    """Limiting per-step spiral angle of an arm: 2*sqrt(a) mod 2*pi.

    Accepts a QuadraticPoly or a bare leading coefficient.  The companion
    drift is the same angle reduced to (-pi, pi]; when 2*sqrt(a) falls on a
    multiple of pi the arm re-aligns every other step and the drift is
    reported as 0 with the degenerate flag set.
    """
    a = float(p.a) if isinstance(p, QuadraticPoly) else float(p)
    if a <= 0:
        raise ValueError("limit angle needs a > 0")
    step = 2.0 * math.sqrt(a)
    angle = step % TAU
    drift = wrap_signed(step)
    if abs(abs(drift) - math.pi) < 1e-12 or abs(drift) < 1e-12:
        return SpiralAngle(angle, 0.0, True)
    return SpiralAngle(angle, drift, False)
