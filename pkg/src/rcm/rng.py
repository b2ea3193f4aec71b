"""SplitMix64, the generator behind every seeded corpus.

State transition: ``state += 0x9E3779B97F4A7C15 (mod 2**64)``; the output is
the state mixed by two xor-shift-multiply rounds and a final xor-shift.
Chosen because it is tiny and trivially reproduced in any language.
"""

from __future__ import annotations

from fractions import Fraction

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound

    def bernoulli(self, p: Fraction) -> bool:
        """True with probability p; exact for dyadic p, one draw per call."""
        return self.next() < threshold(p)


def threshold(p: Fraction) -> int:
    if not 0 <= p <= 1:
        raise ValueError("probability must lie in [0, 1]")
    return (p.numerator << 64) // p.denominator


def derive_seed(seed: int, index: int) -> int:
    """Independent per-instance seed, used by the stress families."""
    return SplitMix64((seed & MASK64) ^ ((index * GOLDEN) & MASK64)).next()
