import random
from fractions import Fraction

import pytest

from chevsuper.errors import DivisionByZero
from chevsuper.scalars import (QQ, FpElement, PrimeField, integer_binomial,
                               is_integer, parse_field, scalar_inv)


def test_integer_binomial_values():
    assert integer_binomial(5, 2) == 10
    assert integer_binomial(4, 0) == 1
    assert integer_binomial(3, 5) == 0
    assert integer_binomial(0, 0) == 1
    # negative upper argument follows the falling-factorial convention
    assert integer_binomial(-1, 3) == -1
    assert integer_binomial(-2, 2) == 3
    assert integer_binomial(-3, 1) == -3
    assert integer_binomial(7, -1) == 0


def test_integer_binomial_pascal():
    for m in range(-6, 7):
        for n in range(0, 7):
            assert integer_binomial(m + 1, n + 1) == \
                integer_binomial(m, n) + integer_binomial(m, n + 1)


def test_prime_field_requires_prime_above_three():
    for bad in (0, 1, 2, 3, 4, 6, 9, 15):
        with pytest.raises(ValueError):
            PrimeField(bad)
    PrimeField(5)
    PrimeField(7)
    PrimeField(101)


def test_fp_arithmetic():
    F = PrimeField(5)
    a = F(7)
    assert a.residue == 2
    assert (a + F(4)).residue == 1
    assert (a * F(3)).residue == 1
    assert (-a).residue == 3
    assert (F(1) / F(2)).residue == 3
    assert (F(2) ** -1).residue == 3
    assert scalar_inv(F(2)) == F(3)
    with pytest.raises(DivisionByZero):
        F(1) / F(0)
    with pytest.raises(DivisionByZero):
        scalar_inv(F(5))


def test_fp_fraction_coercion():
    F = PrimeField(7)
    assert F(Fraction(1, 2)) == F(4)
    assert (F(1) + Fraction(3, 2)) == F(1) + F(3) * F(2) ** -1
    with pytest.raises(DivisionByZero):
        F(Fraction(1, 7))


def test_field_axioms_random():
    rng = random.Random(41)
    F = PrimeField(7)
    for _ in range(300):
        a, b, c = (F(rng.randrange(7)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == F(0)
        if a.residue:
            assert a * (F(1) / a) == F(1)


def test_rational_field():
    assert QQ(3) == Fraction(3)
    assert QQ.characteristic == 0
    assert QQ.name == "rational"
    assert is_integer(Fraction(4, 2))
    assert not is_integer(Fraction(1, 2))


def test_parse_field():
    assert parse_field("rational") is QQ
    assert parse_field("mod:5").p == 5
    for bad in ("mod:4", "mod:x", "gf5", ""):
        with pytest.raises(ValueError):
            parse_field(bad)
