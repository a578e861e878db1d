"""Deterministic 64-bit generator for reproducible experiments.

A counter-based mix-and-multiply stream (the splitmix64 finalizer over
an additive counter). Reproducibility is a contract of this package:
the same seed always yields the same draws, independent of platform,
hash randomization, or how work is scheduled across threads.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """Avalanche-mix one 64-bit value."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return (z ^ (z >> 31)) & _MASK


class Stream:
    """Sequential draws from a seed; each call advances the counter."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform draw from range(bound), rejection-sampled to kill bias."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next64()
            if v < limit:
                return v % bound


def derive_seed(seed: int, *indices: int) -> int:
    """Independent child seed for a labeled subtask (e.g. one trial)."""
    out = seed & _MASK
    for i in indices:
        out = mix64(out ^ ((i + 1) * _GOLDEN))
    return out
