"""Deterministic rational sample points for pointwise oracles.

Coordinates are drawn from numerators -3..3 over denominators 1..3, which
keeps Fraction arithmetic small while exercising non-integer points.  The
generator is seeded, so a report that records its seed pins every sample."""

from __future__ import annotations

import random
from fractions import Fraction


class RationalSampler:
    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    def fraction(self) -> Fraction:
        return Fraction(self._rng.randint(-3, 3), self._rng.randint(1, 3))

    def point(self, dim: int) -> tuple[Fraction, ...]:
        return tuple(self.fraction() for _ in range(dim))
