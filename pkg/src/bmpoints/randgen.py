"""Deterministic random instances, reproducible across platforms.

A SplitMix64 stream drives every draw, so (seed, field, n) pins the point
set bit-for-bit regardless of Python's hash or random module versions.
Prime-field sets come from partial Fisher-Yates over grid indices [0, q^2);
rational sets draw bounded numerators/denominators and reject duplicates.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import Field
from .points import PointSet

_MASK = (1 << 64) - 1


class SplitMix64:
    """64-bit SplitMix generator (Steele-Lea-Flood increment and mixer)."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        return self.next_u64() % bound


def _sample_distinct(n: int, m: int, rng: SplitMix64) -> list:
    """n distinct values from range(m) by partial Fisher-Yates over a
    sparse permutation."""
    perm: dict = {}
    out = []
    for k in range(n):
        j = k + rng.below(m - k)
        vj = perm.get(j, j)
        out.append(vj)
        perm[j] = perm.get(k, k)
        perm[k] = vj
    return out


def gen_points(field: Field, n: int, seed: int) -> PointSet:
    """n distinct points over the field, pinned by the seed."""
    if n < 1:
        raise ValueError("need at least one point")
    rng = SplitMix64(seed)
    if field.char:
        q = field.char
        if n > q * q:
            raise ValueError(f"cannot draw {n} distinct points from a "
                             f"{q}x{q} grid")
        idxs = _sample_distinct(n, q * q, rng)
        pts = [(idx % q, idx // q) for idx in idxs]
    else:
        pts = []
        seen = set()
        while len(pts) < n:
            x = Fraction(rng.below(201) - 100, rng.below(100) + 1)
            y = Fraction(rng.below(201) - 100, rng.below(100) + 1)
            if (x, y) in seen:
                continue
            seen.add((x, y))
            pts.append((x, y))
    return PointSet(field, pts)
