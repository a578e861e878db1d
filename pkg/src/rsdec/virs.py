"""Decoding by virtual interleaving.

Raising the received word symbolwise to the powers 1..s produces s
words, the i-th lying within the original error support of a code of
dimension i(k-1) + 1 on the same locators. All s words share one error
locator, so a single homogeneous system A Q = 0 searches for the stack
Q = (Q^(0), ..., Q^(s)) with Q^(s) = Lambda and Q^(t) = Lambda f^(s-t).
The shared locator is what pushes the radius beyond half the minimum
distance:

    tau = floor((s n - C(s+1, 2)(k - 1) - s) / (s + 1)).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .code import CodeSpec, Word
from .field import Field, FieldElement
from .linalg import Mat, nullspace
from .outcome import DecodeOutcome, conclude
from .poly import UniPoly, poly_divrem


def feasible(n: int, k: int, s: int) -> bool:
    """The s-th power word must still sit in a code shorter than n."""
    return s >= 1 and s * (k - 1) + 1 <= n


def virs_radius(n: int, k: int, s: int) -> int:
    if not (1 <= k <= n):
        raise ValueError("need 1 <= k <= n")
    if not feasible(n, k, s):
        raise ValueError(f"order {s} infeasible for (n, k) = ({n}, {k})")
    return (s * n - (s * (s + 1) // 2) * (k - 1) - s) // (s + 1)


def block_widths(k: int, s: int, tau: int) -> tuple[int, ...]:
    """Width of column block t = 0..s: component t holds Lambda f^(s-t),
    so its degree cap is tau + (s-t)(k-1)."""
    return tuple(tau + (s - t) * (k - 1) + 1 for t in range(s + 1))


@dataclass(frozen=True)
class VirsParams:
    spec: CodeSpec
    s: int
    tau: int
    Ni: tuple[int, ...] = dc_field(default=(), compare=False)
    N: int = dc_field(default=0, compare=False)

    def __post_init__(self):
        n, k = self.spec.n, self.spec.k
        if not feasible(n, k, self.s):
            raise ValueError(f"order {self.s} infeasible for (n, k) = ({n}, {k})")
        if self.tau < 0:
            raise ValueError("radius must be nonnegative")
        ni = tuple(self.tau + i * (k - 1) + 1 for i in range(self.s + 1))
        total = sum(ni)
        assert total == (self.s + 1) * (self.tau + 1) + (self.s * (self.s + 1) // 2) * (k - 1)
        object.__setattr__(self, "Ni", ni)
        object.__setattr__(self, "N", total)

    @classmethod
    def at_max_radius(cls, spec: CodeSpec, s: int) -> "VirsParams":
        return cls(spec, s, virs_radius(spec.n, spec.k, s))


@dataclass(frozen=True)
class StackedSolution:
    """Coefficient stack (Q^(0), ..., Q^(s)); component t caps at
    degree tau + (s-t)(k-1)."""

    components: tuple[UniPoly, ...]

    @property
    def s(self) -> int:
        return len(self.components) - 1

    @classmethod
    def from_pair(cls, locator: UniPoly, f: UniPoly, s: int) -> "StackedSolution":
        return cls(tuple(locator * f ** (s - t) for t in range(s + 1)))

    @classmethod
    def from_vector(cls, field: Field, vec, widths) -> "StackedSolution":
        if len(vec) != sum(widths):
            raise ValueError("vector length does not match block widths")
        comps = []
        at = 0
        for width in widths:
            comps.append(UniPoly(field, vec[at : at + width]))
            at += width
        return cls(tuple(comps))

    def to_vector(self, widths) -> list[FieldElement]:
        if len(widths) != len(self.components):
            raise ValueError("block count mismatch")
        out = []
        for p, width in zip(self.components, widths):
            if p.degree >= width:
                raise ValueError("component degree exceeds its block width")
            out.extend(p.coeff(j) for j in range(width))
        return out


def build_Mi(spec: CodeSpec, tau: int, i: int) -> Mat:
    """n x (tau + i(k-1) + 1) Vandermonde block on the locators."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    width = tau + i * (spec.k - 1) + 1
    q = spec.field.q
    rows = []
    for a in spec.locators:
        row = [1] * width
        for j in range(1, width):
            row[j] = (row[j - 1] * a.value) % q
        rows.append(row)
    return Mat(spec.field, rows)


def build_A(spec: CodeSpec, r: Word, s: int, tau: int) -> Mat:
    """The sn x N system. Band i = 1..s (rows (i-1)n..in-1) encodes

        r_j^i Lambda(alpha_j) - (Lambda f^i)(alpha_j) = 0,

    i.e. -M_i in the block of Q^(s-i) and diag(r)^i M_0 in the block of
    Q^(s). Column blocks run Q^(0) leftmost through Q^(s) rightmost,
    degrees ascending inside each block.
    """
    if not feasible(spec.n, spec.k, s):
        raise ValueError(f"order {s} infeasible for (n, k) = ({spec.n}, {spec.k})")
    if len(r) != spec.n:
        raise ValueError("word length must equal n")
    q = spec.field.q
    widths = block_widths(spec.k, s, tau)
    starts = [sum(widths[:t]) for t in range(s + 1)]
    total = sum(widths)
    m0 = build_Mi(spec, tau, 0)
    rows = []
    for i in range(1, s + 1):
        mi = build_Mi(spec, tau, i)
        for j in range(spec.n):
            row = [0] * total
            at = starts[s - i]
            for v in mi.rows[j]:
                row[at] = -v % q
                at += 1
            ri = pow(r.symbols[j].value, i, q)
            at = starts[s]
            for v in m0.rows[j]:
                row[at] = (ri * v) % q
                at += 1
            rows.append(row)
    return Mat(spec.field, rows)


def _select_stack(field: Field, basis, widths) -> StackedSolution | None:
    """Minimal top-component degree among basis vectors, first on ties."""
    best = None
    for vec in basis:
        stack = StackedSolution.from_vector(field, vec, widths)
        top = stack.components[-1]
        if top.is_zero():
            continue
        if best is None or top.degree < best.components[-1].degree:
            best = stack
    return best


def virs_decode(spec: CodeSpec, r: Word, s: int) -> DecodeOutcome:
    tau = virs_radius(spec.n, spec.k, s)
    matrix = build_A(spec, r, s, tau)
    basis = nullspace(matrix)
    if not basis:
        return DecodeOutcome.failure("interpolation system has no nonzero solution")
    widths = block_widths(spec.k, s, tau)
    stack = _select_stack(spec.field, basis, widths)
    if stack is None:
        return DecodeOutcome.failure("no solution with nonzero locator component")
    top = stack.components[-1]
    f, rem = poly_divrem(stack.components[-2], top)
    if not rem.is_zero():
        return DecodeOutcome.failure("locator does not divide the message component")
    # the full stack must be Lambda times consecutive powers of f; a
    # vector passing the division by luck but breaking this shape is a
    # spurious solution, not a decode
    for t in range(s - 1):
        if stack.components[t] != top * f ** (s - t):
            return DecodeOutcome.failure("solution stack is not a power progression")
    return conclude(spec, r, tau, top, f)
