import pytest

from rumin_poisson.kostant import adjointPairingCheck, homologyRanks, kostantCodiff, pplus, techCodiff, wedge_pp
from rumin_poisson.scalars import ONE


@pytest.mark.parametrize("n", [1, 2])
def test_two_formulas_agree(n):
    pp = pplus(n)
    for k in range(pp.dim + 1):
        for m in pp.all_monomials(k):
            assert kostantCodiff(pp, {m: ONE}) == techCodiff(pp, {m: ONE})


@pytest.mark.parametrize("n", [1, 2])
def test_adjointness_and_sign_sensitivity(n):
    pp = pplus(n)
    assert all(adjointPairingCheck(pp, k) for k in range(1, 2 * n + 1))
    # a global sign convention cancels out of the identity
    assert all(adjointPairingCheck(pp, k, sign_flip=True) for k in range(1, 2 * n + 1))


def _wrong_parity_holds(pp, k):
    top = 2 * pp.n + 2 - k
    for ma in pp.all_monomials(k):
        da = kostantCodiff(pp, {ma: ONE})
        for mb in pp.all_monomials(top):
            lhs = wedge_pp(da, {mb: ONE})
            rhs = wedge_pp({ma: ONE}, kostantCodiff(pp, {mb: ONE}))
            if k % 2 == 0:
                rhs = {m: -c for m, c in rhs.items()}
            if lhs != rhs:
                return False
    return True


def test_adjointness_sign_matters():
    pp = pplus(2)
    assert not all(_wrong_parity_holds(pp, k) for k in range(1, 5))


def test_homology_n1():
    rows = {r.k: r for r in homologyRanks(pplus(1))}
    # k = 2: map from a one-dimensional to a one-dimensional space, bijective
    assert rows[2].source_dim == 1 and rows[2].target_dim == 1 and rows[2].rank == 1


@pytest.mark.parametrize("n", [1, 2, 3])
def test_homology_claims(n):
    for row in homologyRanks(pplus(n)):
        if 2 <= row.k <= n + 1:
            assert row.surjective
        if row.k >= n + 1:
            assert row.injective


def test_degree_zero_and_one_vanish():
    pp = pplus(2)
    for k in (0, 1):
        for m in pp.all_monomials(k):
            assert not kostantCodiff(pp, {m: ONE})
