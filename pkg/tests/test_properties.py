"""Property tests for structural invariants of the engine."""

from hypothesis import given, strategies as st

from rumin_poisson.calculus import basic_forms, d_raw, dK, dP, invariantSubspace, is_invariant, pCodifferential
from rumin_poisson.exterior import Multiform, Stratum, conjugate, layout, wedge
from rumin_poisson.hodge import hodgeStarK, hodgeStarKInverse, pairingK
from rumin_poisson.kernels import kernelHigh
from rumin_poisson.lie_model import buildModel
from rumin_poisson.scalars import ONE

from conftest import forms, homogeneous, scalars

M1 = buildModel(1)
M2 = buildModel(2)
INV_32 = invariantSubspace(M1, Stratum(bidegree=(3, 2)))


@given(forms(n=1, max_terms=5))
def test_d_commutes_with_conjugation(a):
    assert conjugate(d_raw(M1, a)) == d_raw(M1, conjugate(a))


@given(st.lists(scalars, min_size=len(INV_32), max_size=len(INV_32)))
def test_d_preserves_invariance(cs):
    f = Multiform.zero(1)
    for c, b in zip(cs, INV_32):
        f = f + b.scale(c)
    assert is_invariant(M1, f)
    assert is_invariant(M1, dK(M1, f))
    assert is_invariant(M1, dP(M1, f))
    # d^2 = 0 holds on m-invariant forms (not on arbitrary ones, g/m is no Lie algebra)
    assert d_raw(M1, d_raw(M1, f)).is_zero()
    assert pCodifferential(M1, pCodifferential(M1, f)).is_zero()


@given(homogeneous(n=1, degree=3, max_terms=4))
def test_pcod_lands_in_ideal_of_I(a):
    lay = layout(1)
    out = pCodifferential(M1, a)
    for m in out.terms:
        assert m & lay.i_mask


def _k_form(n, max_terms=3):
    lay = layout(n)
    return st.dictionaries(st.integers(0, lay.k_mask), scalars, max_size=max_terms).map(lambda d: Multiform(n, d))


@given(_k_form(2), _k_form(2))
def test_star_linear_and_invertible(a, b):
    assert hodgeStarK(M2, a + b) == hodgeStarK(M2, a) + hodgeStarK(M2, b)
    assert hodgeStarKInverse(M2, hodgeStarK(M2, a)) == a


@given(_k_form(1), _k_form(1))
def test_pairing_symmetric(a, b):
    assert pairingK(a, b) == pairingK(b, a)


@given(scalars, scalars)
def test_high_kernel_conjugation(alpha, beta):
    for p, q in [(2, 1), (1, 2), (2, 2)]:
        assert conjugate(kernelHigh(1, p, q, alpha, beta)) == kernelHigh(1, q, p, beta.conjugate(), alpha.conjugate())


@given(scalars)
def test_basic_forms_wedge_with_I_kill_vertical_codifferential(c):
    b = basic_forms(1)
    f = wedge(b.I, b.w11.scale(c) + b.w20)
    assert pCodifferential(M1, f).is_zero()
