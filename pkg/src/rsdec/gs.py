"""Guruswami-Sudan interpolation by dense linear algebra.

The interpolation polynomial Q(x, y) must have y-degree at most ell,
(1, k-1)-weighted degree below s(n - tau), and a zero of multiplicity
s at every point (locator_i, r_i). Those constraints are linear in the
coefficients, so one nullspace computation produces Q. The point of
this module is verifiability, not speed; no fast interpolation is
attempted. It also hosts the univariate key-equation view: Q passes
the interpolation constraints exactly when each Hasse y-derivative
composed with the full-word interpolation polynomial is divisible by
the locator product G(x) to the complementary power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bivariate import BiPoly, hasse_y, shift, substitute_y
from .code import CodeSpec, Word, interpolate_word
from .field import binom_mod
from .linalg import Mat, nullspace
from .poly import UniPoly, locator_poly, poly_divrem


@dataclass(frozen=True)
class GsParams:
    n: int
    k: int
    ell: int
    s: int
    tau: int

    def __post_init__(self):
        if not (1 <= self.k <= self.n):
            raise ValueError("need 1 <= k <= n")
        if self.ell < 1 or self.s < 1 or self.tau < 0:
            raise ValueError("need ell >= 1, s >= 1, tau >= 0")

    def column_widths(self) -> tuple[int, ...]:
        bound = self.s * (self.n - self.tau)
        return tuple(max(0, bound - t * (self.k - 1)) for t in range(self.ell + 1))


def gs_params_valid(p: GsParams) -> tuple[bool, int, int]:
    """(valid, unknowns, constraints); valid iff unknowns > constraints."""
    unknowns = sum(p.column_widths())
    constraints = p.n * (p.s * (p.s + 1) // 2)
    return unknowns > constraints, unknowns, constraints


def _constraint_matrix(spec: CodeSpec, r: Word, p: GsParams) -> Mat:
    """Rows are mixed Hasse evaluations; columns ordered by y-degree
    then x-degree, so nullspace bases are stable across runs."""
    q = spec.field.q
    widths = p.column_widths()
    rows = []
    for x0, y0 in zip(spec.locators, r.symbols):
        xv, yv = x0.value, y0.value
        max_width = max(widths)
        xpow = [1] * max_width
        for j in range(1, max_width):
            xpow[j] = (xpow[j - 1] * xv) % q
        ypow = [1] * (p.ell + 1)
        for t in range(1, p.ell + 1):
            ypow[t] = (ypow[t - 1] * yv) % q
        for total in range(p.s):
            for b in range(total + 1):
                a = total - b
                row = []
                for t, width in enumerate(widths):
                    if t < b:
                        row.extend([0] * width)
                        continue
                    cy = (binom_mod(t, b, q) * ypow[t - b]) % q
                    for j in range(width):
                        if j < a or cy == 0:
                            row.append(0)
                        else:
                            row.append((binom_mod(j, a, q) * xpow[j - a] * cy) % q)
                rows.append(row)
    return Mat(spec.field, rows)


def gs_interpolate(spec: CodeSpec, r: Word, p: GsParams) -> BiPoly:
    if spec.n != p.n or spec.k != p.k:
        raise ValueError("parameter set does not match the code")
    if len(r) != spec.n:
        raise ValueError("word length must equal n")
    valid, unknowns, constraints = gs_params_valid(p)
    if not valid:
        raise ValueError(
            f"parameters admit {unknowns} unknowns for {constraints} constraints"
        )
    matrix = _constraint_matrix(spec, r, p)
    basis = nullspace(matrix)
    if not basis:
        raise ValueError("constraint matrix has full column rank")
    vec = basis[0]
    widths = p.column_widths()
    comps = []
    at = 0
    for width in widths:
        comps.append(UniPoly(spec.field, vec[at : at + width]))
        at += width
    return BiPoly(spec.field, comps)


def multiplicity_at(Q: BiPoly, x0, y0) -> int:
    """Vanishing order of Q at (x0, y0): least total degree after shifting."""
    if Q.is_zero():
        raise ValueError("zero polynomial has no multiplicity")
    shifted = shift(Q, x0, y0)
    best = None
    for t, p in enumerate(shifted.components):
        for i, c in enumerate(p.coeffs):
            if c.value != 0 and (best is None or i + t < best):
                best = i + t
    return best


def key_equation_check(Q: BiPoly, spec: CodeSpec, r: Word, p: GsParams) -> bool:
    """True iff G(x)^(s-b) exactly divides Q^[b](x, R(x)) for each b < s
    and each quotient's degree stays below ell(n-k) - s*tau + b."""
    R = interpolate_word(spec, r)
    G = locator_poly(spec.field, spec.locators)
    for b in range(p.s):
        composed = substitute_y(hasse_y(Q, b), R)
        quotient, rem = poly_divrem(composed, G ** (p.s - b))
        if not rem.is_zero():
            return False
        if quotient.degree >= p.ell * (p.n - p.k) - p.s * p.tau + b:
            return False
    return True
