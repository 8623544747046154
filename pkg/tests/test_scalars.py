from fractions import Fraction

import pytest
from hypothesis import given

from rumin_poisson.scalars import I_UNIT, ONE, ZERO, Scalar, as_scalar, parse_scalar

from conftest import scalars


def test_unit_arithmetic():
    assert I_UNIT * I_UNIT == -ONE
    assert ONE + ZERO == ONE
    assert Scalar(1, 2) * Scalar(3, -1) == Scalar(5, 5)


def test_division_is_exact():
    assert Scalar(1, 1) / Scalar(1, -1) == I_UNIT
    assert Scalar(Fraction(1, 3)) * 3 == ONE


@pytest.mark.parametrize(
    "text,value",
    [
        ("2", Scalar(2)),
        ("3i", Scalar(0, 3)),
        ("-i", Scalar(0, -1)),
        ("1/2-3i/4", Scalar(Fraction(1, 2), Fraction(-3, 4))),
        ("2+3i", Scalar(2, 3)),
    ],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


def test_parse_roundtrips_str():
    for s in (Scalar(Fraction(-2, 7), Fraction(5, 3)), Scalar(0, -1), Scalar(4)):
        assert parse_scalar(str(s)) == s


def test_as_scalar_rejects_inexact_complex():
    with pytest.raises(TypeError):
        as_scalar(0.5 + 1j)
    assert as_scalar(2 + 3j) == Scalar(2, 3)


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a


@given(scalars)
def test_norm(a):
    assert a * a.conjugate() == Scalar(a.norm2())
