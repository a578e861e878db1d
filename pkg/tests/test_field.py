import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsdec import Field, binom_mod

PRIMES = [2, 3, 5, 7, 17, 31, 257, 65521]


def test_field_rejects_non_prime():
    for q in [0, 1, 4, 9, 15, 65536]:
        with pytest.raises(ValueError):
            Field(q)


def test_field_rejects_oversized_prime():
    # 65537 is prime but one past the 16-bit cap
    with pytest.raises(ValueError):
        Field(65537)


def test_field_rejects_bool():
    with pytest.raises(ValueError):
        Field(True)


def test_primitive_element_search():
    assert Field(2).alpha().value == 1
    assert Field(7).alpha().value == 3
    assert Field(17).alpha().value == 3


def test_primitive_element_has_full_order():
    for q in PRIMES:
        a = Field(q).alpha()
        seen = set()
        cur = Field(q)(1)
        for _ in range(q - 1):
            seen.add(cur.value)
            cur = cur * a
        assert len(seen) == q - 1


def test_explicit_alpha_validated():
    assert Field(17, 5).alpha().value == 5
    with pytest.raises(ValueError):
        Field(17, 2)  # order 8
    with pytest.raises(ValueError):
        Field(17, 16)  # order 2
    with pytest.raises(ValueError):
        Field(17, 0)


def test_element_canonicalization():
    F = Field(7)
    assert F(10).value == 3
    assert F(-1).value == 6
    assert F(7) == F(0)


def test_arithmetic_against_int_model():
    F = Field(31)
    for a in range(31):
        for b in range(31):
            assert (F(a) + F(b)).value == (a + b) % 31
            assert (F(a) - F(b)).value == (a - b) % 31
            assert (F(a) * F(b)).value == (a * b) % 31


def test_int_coercion_both_sides():
    F = Field(13)
    a = F(5)
    assert a + 3 == F(8)
    assert 3 + a == F(8)
    assert a - 7 == F(11)
    assert 7 - a == F(2)
    assert a * 4 == F(7)
    assert 4 * a == F(7)
    assert -a == F(8)
    assert a == 5


def test_bool_is_not_a_field_element():
    F = Field(13)
    with pytest.raises(TypeError):
        F(5) + True


def test_mixed_fields_rejected():
    with pytest.raises(ValueError):
        Field(7)(1) + Field(11)(1)


def test_inverse_and_division():
    F = Field(31)
    for a in range(1, 31):
        assert (F(a) * F(a).inverse()).value == 1
    assert (F(6) / F(3)).value == 2
    assert (1 / F(2)).value == 16
    with pytest.raises(ZeroDivisionError):
        F(0).inverse()
    with pytest.raises(ZeroDivisionError):
        F(3) / F(0)


def test_pow():
    F = Field(17)
    assert (F(3) ** 0).value == 1
    assert (F(3) ** 16).value == 1
    assert (F(0) ** 0).value == 1
    with pytest.raises(TypeError):
        F(3) ** -1


@given(st.sampled_from(PRIMES), st.integers(0, 10**6), st.integers(0, 10**6))
def test_field_ops_match_modular_ints(q, a, b):
    F = Field(q)
    assert (F(a) * F(b)).value == (a * b) % q
    assert (F(a) + F(b)).value == (a + b) % q


@given(st.integers(0, 40), st.integers(-3, 45), st.sampled_from(PRIMES))
def test_binom_matches_math_comb(n, k, q):
    expect = math.comb(n, k) % q if 0 <= k <= n else 0
    assert binom_mod(n, k, q) == expect


def test_binom_characteristic_wraps():
    assert binom_mod(2, 1, 2) == 0
    assert binom_mod(4, 2, 3) == 0  # C(4,2) = 6
    assert binom_mod(2, 1, 17) == 2


def test_repr_and_hash():
    F = Field(17)
    assert repr(F) == "GF(17)"
    assert repr(F(5)) == "5"
    assert len({F(1), F(1), F(2)}) == 2
    assert Field(17) == Field(17)
    assert Field(17) != Field(13)
