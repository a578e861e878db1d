"""Prime field GF(q) arithmetic.

Elements are canonical residues in [0, q) tied to an owning Field. Each
field also fixes a primitive element (a generator of the multiplicative
group), used elsewhere as the default source of code locators.
"""

from __future__ import annotations

from functools import lru_cache


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _prime_factors(m: int) -> list[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


@lru_cache(maxsize=None)
def _pascal_row(n: int, q: int) -> tuple[int, ...]:
    row = [1]
    for _ in range(n):
        nxt = [1]
        for i in range(len(row) - 1):
            nxt.append((row[i] + row[i + 1]) % q)
        nxt.append(1 % q)
        row = nxt
    return tuple(row)


def binom_mod(n: int, k: int, q: int) -> int:
    """Binomial coefficient C(n, k) reduced mod q.

    Computed by the Pascal recurrence so characteristic effects (e.g.
    C(2,1) = 0 over GF(2)) come out right without big factorials.
    """
    if k < 0 or k > n:
        return 0
    return _pascal_row(n, q)[k]


class Field:
    """GF(q) for prime q up to 2**16, with a fixed primitive element."""

    __slots__ = ("q", "primitive_element")

    def __init__(self, q: int, alpha: int | None = None):
        if not isinstance(q, int) or isinstance(q, bool) or not _is_prime(q):
            raise ValueError(f"modulus must be a prime, got {q!r}")
        if q > 1 << 16:
            raise ValueError(f"modulus {q} exceeds 2**16")
        self.q = q
        if alpha is None:
            alpha = self._smallest_primitive()
        else:
            if not 1 < alpha < q:
                raise ValueError(f"primitive element {alpha} out of range for GF({q})")
            if not self._has_full_order(alpha):
                raise ValueError(f"{alpha} is not primitive in GF({q})")
        self.primitive_element = alpha

    def _has_full_order(self, a: int) -> bool:
        # a generates the multiplicative group iff a^((q-1)/p) != 1 for
        # every prime p dividing q-1.
        return all(pow(a, (self.q - 1) // p, self.q) != 1 for p in _prime_factors(self.q - 1))

    def _smallest_primitive(self) -> int:
        for a in range(1, self.q):
            if self._has_full_order(a):
                return a
        raise AssertionError("unreachable: every prime field has a generator")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def alpha(self) -> "FieldElement":
        return FieldElement(self.primitive_element, self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return self.q == other.q and self.primitive_element == other.primitive_element

    def __hash__(self) -> int:
        return hash((self.q, self.primitive_element))

    def __repr__(self) -> str:
        return f"GF({self.q})"


class FieldElement:
    """A residue mod q. Arithmetic accepts plain ints and coerces them."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: Field):
        self.value = value % field.q
        self.field = field

    def _coerce(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise ValueError(f"mixed fields: {self.field} and {other.field}")
        if isinstance(other, int) and not isinstance(other, bool):
            return FieldElement(other, self.field)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.value + o.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.value - o.value, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(o.value - self.value, self.field)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.value * o.value, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.field)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.field}")
        # Fermat: a^(q-2) a = a^(q-1) = 1 for a != 0.
        return FieldElement(pow(self.value, self.field.q - 2, self.field.q), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return FieldElement(pow(self.value, exponent, self.field.q), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.field.q
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.q))

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return str(self.value)
