"""Cumulative angle table of the square-root spiral.

The spiral is a chain of right triangles with unit short leg; the ray of
length sqrt(n) sits at the cumulative angle w(n-1), where

    w(k) = sum_{j=1..k} arctan(1/sqrt(j)),   w(0) = 0,

measured counterclockwise from the first ray (sqrt(1) along +x).
"""
from __future__ import annotations

import math
import os
import struct
from dataclasses import dataclass

import numpy as np

TAU = 2.0 * math.pi

# Fixed summation block size: rebuilds are bit-identical and block-local
# cumulative sums stay small enough that w(k)-w(k-1) is accurate to well
# under 1e-14 * w(k) even at k = 1e7.
CHUNK = 1 << 16

DEFAULT_CAPACITY = 1 << 27  # table entries (~1 GiB of float64)

CACHE_MAGIC = b"SQSP"
CACHE_VERSION = 1


class CapacityError(Exception):
    """Requested table would exceed the configured entry budget."""


def segment_angle(n: int) -> float:
    """Angle arctan(1/sqrt(n)) contributed by triangle n; n >= 1."""
    if n < 1:
        raise ValueError(f"no triangle with index {n}; indices start at 1")
    return math.atan(1.0 / math.sqrt(n))


def wrap_signed(x: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    m = math.fmod(x, TAU)
    if m > math.pi:
        m -= TAU
    elif m <= -math.pi:
        m += TAU
    return m


@dataclass(frozen=True)
class RayCoord:
    """Position of the ray of length sqrt(n)."""

    n: int
    radius: float
    angle_total: float
    angle_mod: float
    winding: int
    x: float
    y: float


@dataclass(frozen=True)
class SpiralTable:
    """Immutable table of cumulative angles w(0..max_n)."""

    max_n: int
    cum_angle: np.ndarray
    built_with: str = "compensated"

    def w(self, k: int) -> float:
        """Cumulative angle after k triangles."""
        return float(self.cum_angle[k])

    def angle_of(self, n: int) -> float:
        """Total angle of the ray of length sqrt(n); valid for 1 <= n <= max_n+1."""
        if not 1 <= n <= self.max_n + 1:
            raise IndexError(f"ray {n} outside table range 1..{self.max_n + 1}")
        return float(self.cum_angle[n - 1])

    def angle_mod(self, n: int) -> float:
        return self.angle_of(n) % TAU

    def winding(self, n: int) -> int:
        """Winding index, starting at 1 for total angles in [0, 2pi)."""
        return 1 + int(self.angle_of(n) // TAU)

    def ray(self, n: int) -> RayCoord:
        total = self.angle_of(n)
        mod = total % TAU
        r = math.sqrt(n)
        return RayCoord(
            n=n,
            radius=r,
            angle_total=total,
            angle_mod=mod,
            winding=1 + int(total // TAU),
            x=r * math.cos(mod),
            y=r * math.sin(mod),
        )


def _block(lo: int, hi: int) -> np.ndarray:
    k = np.arange(lo, hi, dtype=np.float64)
    return np.arctan(1.0 / np.sqrt(k))


def build_table(max_n: int, mode: str = "compensated",
                capacity: int = DEFAULT_CAPACITY) -> SpiralTable:
    """Build the cumulative-angle table for triangles 1..max_n.

    Summation runs in ascending index order over fixed-size blocks; within a
    block a local cumulative sum is added to the carried total.  In
    "compensated" mode the carry is accumulated with Neumaier compensation,
    in "plain" mode with bare additions.  Output is deterministic and
    bit-identical across runs for a given mode.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    if mode not in ("compensated", "plain"):
        raise ValueError(f"unknown summation mode {mode!r}")
    if max_n + 1 > capacity:
        raise CapacityError(
            f"max_n={max_n} needs {max_n + 1} entries, over the budget of "
            f"{capacity}; raise `capacity` explicitly if intended")
    cum = np.empty(max_n + 1, dtype=np.float64)
    cum[0] = 0.0
    carry = 0.0
    comp = 0.0
    for lo in range(1, max_n + 1, CHUNK):
        hi = min(lo + CHUNK, max_n + 1)
        prefix = np.cumsum(_block(lo, hi))
        base = carry + comp if mode == "compensated" else carry
        cum[lo:hi] = base + prefix
        total = float(prefix[-1])
        if mode == "compensated":
            s = carry + total
            if abs(carry) >= abs(total):
                comp += (carry - s) + total
            else:
                comp += (total - s) + carry
            carry = s
        else:
            carry = carry + total
    cum.flags.writeable = False  # tables are shared read-only
    return SpiralTable(max_n=max_n, cum_angle=cum, built_with=mode)


def stream_cum_angles(ks) -> dict[int, float]:
    """Cumulative angles w(k) at selected indices without storing a table.

    Same block-compensated summation as build_table, but only the requested
    entries are kept; this reaches indices far beyond any sensible table size
    (angles at k ~ 4e8 in a few seconds, O(1) memory).
    """
    ks = sorted(set(int(k) for k in ks))
    out: dict[int, float] = {}
    if not ks:
        return out
    if ks[0] < 0:
        raise ValueError("indices must be >= 0")
    if ks[0] == 0:
        out[0] = 0.0
        ks = ks[1:]
    if not ks:
        return out
    carry = 0.0
    comp = 0.0
    pos = 0
    top = ks[-1]
    for lo in range(1, top + 1, CHUNK):
        hi = min(lo + CHUNK, top + 1)
        prefix = np.cumsum(_block(lo, hi))
        base = carry + comp
        while pos < len(ks) and ks[pos] < hi:
            out[ks[pos]] = base + float(prefix[ks[pos] - lo])
            pos += 1
        total = float(prefix[-1])
        s = carry + total
        if abs(carry) >= abs(total):
            comp += (carry - s) + total
        else:
            comp += (total - s) + carry
        carry = s
    return out


def save_table(table: SpiralTable, path: str) -> None:
    """Persist a table: b"SQSP", version 0x01, u64-LE max_n, float64-LE angles.

    Only the canonical compensated mode is cacheable (the format carries no
    mode tag).
    """
    if table.built_with != "compensated":
        raise ValueError("only compensated-mode tables are cacheable")
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(bytes([CACHE_VERSION]))
        fh.write(struct.pack("<Q", table.max_n))
        fh.write(table.cum_angle.astype("<f8", copy=False).tobytes())
    os.replace(tmp, path)


def load_table(path: str) -> SpiralTable:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != CACHE_MAGIC:
            raise ValueError(f"{path}: not a spiral table cache (bad magic {magic!r})")
        version = fh.read(1)
        if version != bytes([CACHE_VERSION]):
            raise ValueError(f"{path}: unsupported cache version {version!r}")
        (max_n,) = struct.unpack("<Q", fh.read(8))
        data = np.frombuffer(fh.read((max_n + 1) * 8), dtype="<f8")
        if data.size != max_n + 1:
            raise ValueError(f"{path}: truncated cache")
    cum = data.astype(np.float64)
    cum.flags.writeable = False
    return SpiralTable(max_n=int(max_n), cum_angle=cum, built_with="compensated")
