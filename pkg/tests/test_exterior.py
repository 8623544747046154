import pytest
from hypothesis import given

from rumin_poisson.exterior import (
    ModelMismatchError,
    Multiform,
    Stratum,
    conjugate,
    insert,
    layout,
    power,
    project,
    wedge,
)
from rumin_poisson.scalars import I_UNIT, ONE, ZERO, Scalar

from conftest import forms, homogeneous, scalars


def test_layout_ids():
    lay = layout(2)
    assert lay.dim == 11
    assert [lay.names[x] for x in (lay.z, lay.zbar, lay.f10(1), lay.f01(2), lay.i, lay.g10(2), lay.g01(1))] == [
        "Z", "Zbar", "F1^10", "F2^01", "I", "G2^10", "G1^01",
    ]
    assert lay.stratum_of(lay.mask_of(["Z", "F1^01", "I", "G2^10"])) == Stratum((2, 2), (1, 1), (1, 0), True)


def test_wedge_signs():
    a = Multiform.monomial(1, ["Z"])
    b = Multiform.monomial(1, ["Zbar"])
    assert wedge(a, b) == -wedge(b, a)
    assert wedge(a, a).is_zero()
    assert Multiform.monomial(1, ["Zbar", "Z"]) == -Multiform.monomial(1, ["Z", "Zbar"])


def test_mixed_rank_rejected():
    with pytest.raises(ModelMismatchError):
        Multiform.one(1) + Multiform.one(2)


def test_evaluate_determinant():
    f = Multiform.monomial(1, ["Z", "Zbar"])
    assert f.evaluate([{0: ONE}, {1: ONE}]) == ONE
    assert f.evaluate([{1: ONE}, {0: ONE}]) == -ONE


def test_power_and_project():
    f = Multiform.monomial(2, ["F1^10", "F1^01"]) + Multiform.monomial(2, ["F2^10", "F2^01"])
    assert power(f, 2) == wedge(f, f)
    assert power(f, 3).is_zero()
    mixed = f + Multiform.monomial(2, ["I"])
    assert project(mixed, bidegree=(2, 0)) == f


@given(forms(), forms(), forms())
def test_wedge_associative(a, b, c):
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


@given(homogeneous(degree=2), homogeneous(degree=3))
def test_graded_commutative(a, b):
    assert wedge(a, b) == wedge(b, a).scale(-1 if 2 * 3 % 2 else 1)


@given(homogeneous(degree=1), homogeneous(degree=3))
def test_graded_commutative_odd(a, b):
    assert wedge(a, b) == -wedge(b, a)


@given(homogeneous(degree=2), forms(), scalars)
def test_insert_antiderivation(a, b, c):
    v = {0: c, 4: ONE}
    assert insert(v, wedge(a, b)) == wedge(insert(v, a), b) + wedge(a, insert(v, b))


@given(forms())
def test_insert_twice_vanishes(a):
    assert insert(3, insert(3, a)).is_zero()


@given(forms(), forms())
def test_conjugation(a, b):
    assert conjugate(conjugate(a)) == a
    assert conjugate(wedge(a, b)) == wedge(conjugate(a), conjugate(b))
    assert conjugate(a.scale(I_UNIT)) == conjugate(a).scale(-I_UNIT)


@given(forms(n=2, max_terms=6))
def test_serialize_roundtrip(a):
    assert Multiform.deserialize(2, a.serialize()) == a


def test_zero_terms_dropped():
    f = Multiform(1, {3: ZERO, 1: Scalar(2)})
    assert len(f) == 1
