from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rumin_poisson.calculus import (
    InvarianceError,
    basic_forms,
    d_raw,
    dInvariant,
    dK,
    dP,
    delK,
    delKbar,
    invariantSubspace,
    is_invariant,
    pCodifferential,
)
from rumin_poisson.exterior import Multiform, Stratum, insert, wedge
from rumin_poisson.scalars import I_UNIT, ONE, ZERO, Scalar

from conftest import scalars


def test_d_squared_on_basic(model):
    for f in basic_forms(model.n).as_dict().values():
        assert d_raw(model, d_raw(model, f)).is_zero()


def test_splitting(model):
    for f in basic_forms(model.n).as_dict().values():
        assert dK(model, f) + dP(model, f) == d_raw(model, f)
        assert delK(model, f) + delKbar(model, f) == dK(model, f)


def test_omega11_single_term_at_n1(model1):
    b = basic_forms(1)
    assert len(b.w11) == 1
    assert wedge(b.w11, b.w11).is_zero()


def test_table_value_omega11(model):
    # omega11(F^{1,0}_X, G^{0,1}_Y) = 1/2 <X, Y>, tested at basis vectors
    lay = model.layout
    b = basic_forms(model.n)
    for s in range(1, model.n + 1):
        for t in range(1, model.n + 1):
            val = b.w11.evaluate([{lay.f10(s): ONE}, {lay.g01(t): ONE}])
            assert val == (Scalar(Fraction(1, 2)) if s == t else ZERO)


def test_omega02_codifferential_oracle(model):
    n = model.n
    b = basic_forms(n)
    # direct insertion: omega02 = -i/2 sum ... pairs G^{1,0}_s with G^{0,1}_s
    assert pCodifferential(model, b.w02) == b.I.scale(Scalar(0, Fraction(n, 2)))


def test_vertical_codifferential_kills_ideal(model):
    b = basic_forms(model.n)
    for f in b.as_dict().values():
        assert pCodifferential(model, wedge(b.I, f)).is_zero()


def test_invariance_guard(model1):
    lay = model1.layout
    F = Multiform.dual(1, lay.f10(1))
    with pytest.raises(InvarianceError):
        dInvariant(model1, F, check=True)
    assert dInvariant(model1, basic_forms(1).Z, check=True) == d_raw(model1, basic_forms(1).Z)


def test_invariant_dimensions(model):
    assert len(invariantSubspace(model, Stratum(bidegree=(0, 1)))) == 1
    assert len(invariantSubspace(model, Stratum(bidegree=(1, 0)))) == 2
    basis = invariantSubspace(model, Stratum(bidegree=(0, 1)))
    assert basis[0].scale(basis[0].terms[model.layout.i_mask].inverse()) == basic_forms(model.n).I


def test_basic_forms_invariant(model):
    for f in basic_forms(model.n).as_dict().values():
        assert is_invariant(model, f)


def test_invariant_two_forms_n1(model1):
    # bidegree (2,0): iZ^Zbar and omega20 (two real forms) span the invariants at n = 1
    basis = invariantSubspace(model1, Stratum(bidegree=(2, 0)))
    assert len(basis) == 2


@given(st.lists(scalars, min_size=4, max_size=4))
def test_d_linear_and_leibniz(model_cs):
    from rumin_poisson.lie_model import buildModel

    model = buildModel(1)
    b = basic_forms(1)
    a1, a2, a3, a4 = model_cs
    f = b.Z.scale(a1) + b.Zbar.scale(a2)
    g = b.I.scale(a3) + b.w20.scale(a4)
    lhs = d_raw(model, wedge(f, g))
    rhs = wedge(d_raw(model, f), g) - wedge(f, d_raw(model, g))
    assert lhs == rhs
