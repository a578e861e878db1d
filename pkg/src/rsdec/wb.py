"""Welch-Berlekamp decoding up to half the minimum distance.

The decoder looks for Q(x, y) = Q0(x) + Q1(x) y vanishing at every
point (locator_i, r_i), with deg Q0 < n - tau0 and deg Q1 < n - tau0
- k + 1 where tau0 = floor((n - k) / 2). Any nonzero solution factors
as Q1 * (y - f) when at most tau0 errors occurred, so f falls out of
one exact polynomial division and Q1 is the error locator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import CodeSpec, Word
from .linalg import Mat, nullspace
from .outcome import DecodeOutcome, conclude
from .poly import UniPoly, poly_divrem


def wb_radius(n: int, k: int) -> int:
    if not (1 <= k <= n):
        raise ValueError("need 1 <= k <= n")
    return (n - k) // 2


@dataclass(frozen=True)
class WbSystem:
    """Homogeneous system for (Q0, Q1), coefficients ascending per block."""

    matrix: Mat
    tau0: int
    width0: int
    width1: int

    def split(self, vec) -> tuple[UniPoly, UniPoly]:
        field = self.matrix.field
        q0 = UniPoly(field, vec[: self.width0])
        q1 = UniPoly(field, vec[self.width0 :])
        return q0, q1


def wb_build(spec: CodeSpec, r: Word) -> WbSystem:
    if len(r) != spec.n:
        raise ValueError("word length must equal n")
    tau0 = wb_radius(spec.n, spec.k)
    width0 = spec.n - tau0
    width1 = spec.n - tau0 - spec.k + 1
    q = spec.field.q
    rows = []
    for a, ri in zip(spec.locators, r.symbols):
        av, rv = a.value, ri.value
        powers = [1] * max(width0, width1)
        for j in range(1, len(powers)):
            powers[j] = (powers[j - 1] * av) % q
        rows.append(powers[:width0] + [(rv * p) % q for p in powers[:width1]])
    return WbSystem(Mat(spec.field, rows), tau0, width0, width1)


def wb_decode(spec: CodeSpec, r: Word) -> DecodeOutcome:
    system = wb_build(spec, r)
    basis = nullspace(system.matrix)
    if not basis:
        return DecodeOutcome.failure("interpolation system has no nonzero solution")
    best = None
    for vec in basis:
        q0, q1 = system.split(vec)
        if q1.is_zero():
            continue
        if best is None or q1.degree < best[1].degree:
            best = (q0, q1)
    if best is None:
        return DecodeOutcome.failure("no solution with nonzero locator component")
    q0, q1 = best
    f, rem = poly_divrem(-q0, q1)
    if not rem.is_zero():
        return DecodeOutcome.failure("locator does not divide the message component")
    return conclude(spec, r, system.tau0, q1, f)
