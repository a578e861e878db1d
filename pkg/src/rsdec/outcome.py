"""Decoder result type shared by every decoding method."""

from __future__ import annotations

from dataclasses import dataclass

from .code import CodeSpec, Word, corrupt, encode, weight
from .poly import UniPoly


@dataclass(frozen=True)
class DecodeOutcome:
    success: bool
    f: UniPoly | None = None
    locator: UniPoly | None = None
    corrected: Word | None = None
    error_positions: tuple[int, ...] = ()
    reason: str | None = None

    @classmethod
    def failure(cls, reason: str) -> "DecodeOutcome":
        return cls(success=False, reason=reason)

    def __bool__(self) -> bool:
        return self.success


def conclude(spec: CodeSpec, r: Word, tau: int, locator: UniPoly, f: UniPoly) -> DecodeOutcome:
    """Final acceptance gate shared by all decoders.

    Given a candidate (locator, message) pair, accept only if the
    message fits the code dimension and the re-encoded codeword lies
    within distance tau of the received word. A decoder never reports
    a codeword farther than its radius.
    """
    if f.degree >= spec.k:
        return DecodeOutcome.failure(f"message degree {f.degree} >= dimension {spec.k}")
    c = encode(spec, f)
    residual = corrupt(r, Word(spec.field, [-v for v in c.symbols], kind="error"))
    if weight(residual) > tau:
        return DecodeOutcome.failure(
            f"corrected word at distance {weight(residual)} > radius {tau}"
        )
    return DecodeOutcome(
        success=True,
        f=f,
        locator=locator.monic(),
        corrected=c,
        error_positions=spec.positions_of_roots(locator),
    )
