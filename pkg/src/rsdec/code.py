"""Reed-Solomon codes by evaluation, plus channel and symbol-power maps.

RS(n, k) is the set of words obtained by evaluating every polynomial of
degree below k at n fixed distinct nonzero points, the code locators.
The minimum distance is n - k + 1. Raising a received word symbolwise
to the power i lands in the code of dimension i(k-1) + 1 on the same
locators, which is what lets one received word impersonate a stack of
independently encoded rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

from .field import Field, FieldElement
from .poly import UniPoly, lagrange_interpolate
from .rng import Stream


def default_locators(field: Field, n: int) -> tuple[FieldElement, ...]:
    """Consecutive powers 1, alpha, alpha^2, ... of the primitive element."""
    alpha = field.alpha()
    out = []
    cur = field.one
    for _ in range(n):
        out.append(cur)
        cur = cur * alpha
    return tuple(out)


@dataclass(frozen=True)
class CodeSpec:
    field: Field
    n: int
    k: int
    locators: tuple[FieldElement, ...] = dc_field(default=())

    def __post_init__(self):
        if not (1 <= self.k <= self.n < self.field.q):
            raise ValueError("need 1 <= k <= n < q")
        locs = self.locators or default_locators(self.field, self.n)
        if len(locs) != self.n:
            raise ValueError("locator count must equal n")
        vals = [a.value for a in locs]
        if 0 in vals:
            raise ValueError("locators must be nonzero")
        if len(set(vals)) != self.n:
            raise ValueError("locators must be distinct")
        for a in locs:
            if a.field != self.field:
                raise ValueError("locator from a different field")
        object.__setattr__(self, "locators", tuple(locs))

    @property
    def d(self) -> int:
        return self.n - self.k + 1

    def positions_of_roots(self, p: UniPoly) -> tuple[int, ...]:
        """Indices i with p(locators[i]) = 0."""
        return tuple(i for i, a in enumerate(self.locators) if p.evaluate(a).value == 0)


class Word:
    """A length-n vector of field symbols with a role tag.

    The tag records what the word is for (codeword, received, error);
    equality looks only at the symbols so a re-encoded codeword compares
    equal to the transmitted one regardless of tagging.
    """

    __slots__ = ("field", "symbols", "kind")

    KINDS = ("codeword", "received", "error")

    def __init__(self, field: Field, symbols: Iterable[FieldElement], kind: str = "received"):
        syms = tuple(symbols)
        for v in syms:
            if v.field != field:
                raise ValueError("symbol from a different field")
        if kind not in self.KINDS:
            raise ValueError(f"unknown word kind {kind!r}")
        self.field = field
        self.symbols = syms
        self.kind = kind

    @classmethod
    def from_ints(cls, field: Field, ints: Iterable[int], kind: str = "received") -> "Word":
        return cls(field, [field(v) for v in ints], kind)

    def to_ints(self) -> list[int]:
        return [v.value for v in self.symbols]

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i: int) -> FieldElement:
        return self.symbols[i]

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.field == other.field and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash((self.field, self.symbols))

    def __repr__(self) -> str:
        return f"Word({self.to_ints()}, kind={self.kind!r})"


def weight(w: Word) -> int:
    return sum(1 for v in w.symbols if v.value != 0)


def support(w: Word) -> tuple[int, ...]:
    return tuple(i for i, v in enumerate(w.symbols) if v.value != 0)


def encode(spec: CodeSpec, f: UniPoly) -> Word:
    if f.field != spec.field:
        raise ValueError("mixed fields")
    if f.degree >= spec.k:
        raise ValueError(f"message degree {f.degree} >= dimension {spec.k}")
    return Word(spec.field, [f.evaluate(a) for a in spec.locators], kind="codeword")


def power_word(r: Word, i: int) -> Word:
    if i < 1:
        raise ValueError("power must be positive")
    return Word(r.field, [v**i for v in r.symbols], kind=r.kind)


def corrupt(c: Word, e: Word) -> Word:
    if len(c) != len(e):
        raise ValueError("length mismatch")
    if c.field != e.field:
        raise ValueError("mixed fields")
    return Word(c.field, [a + b for a, b in zip(c.symbols, e.symbols)], kind="received")


def random_error(spec: CodeSpec, wt: int, seed: int) -> Word:
    """Exact-weight error word, fully determined by the seed."""
    if not (0 <= wt <= spec.n):
        raise ValueError(f"weight {wt} out of range [0, {spec.n}]")
    stream = Stream(seed)
    # partial Fisher-Yates picks wt distinct positions
    order = list(range(spec.n))
    for i in range(wt):
        j = i + stream.below(spec.n - i)
        order[i], order[j] = order[j], order[i]
    symbols = [0] * spec.n
    for pos in order[:wt]:
        symbols[pos] = 1 + stream.below(spec.field.q - 1)
    return Word.from_ints(spec.field, symbols, kind="error")


def interpolate_word(spec: CodeSpec, w: Word) -> UniPoly:
    """Lagrange polynomial through (locator_i, w_i); degree < n."""
    return lagrange_interpolate(list(zip(spec.locators, w.symbols)))
