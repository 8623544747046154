import pytest

from rumin_poisson.calculus import basic_forms, dP, pCodifferential
from rumin_poisson.exterior import conjugate, wedge
from rumin_poisson.kernels import (
    DomainError,
    KappaIndex,
    KernelSpec,
    build_kernel,
    c_k,
    kappa,
    kernelHigh,
    kernelLow,
    kernelReal,
    lambda_pq,
    omegaJ,
    omegaM,
    real_params,
    set_kappa_mutation,
    tildePiJ,
)
from rumin_poisson.lie_model import buildModel
from rumin_poisson.scalars import I_UNIT, ONE, ZERO, Scalar


def test_kappa_values():
    assert kappa(1, 1, 2, 0) == 2
    assert kappa(1, 1, 2, 1) == 2
    assert kappa(2, 1, 2, 2) == 0
    assert kappa(1, 1, 1, 0) == 0


def test_kappa_index():
    assert KappaIndex(1, 1, 2, 0).admissible(1)
    assert not KappaIndex(1, 1, 2, 2).admissible(1)


def test_omega_domain():
    with pytest.raises(DomainError):
        omegaJ(1, 2, 0, 2, 0)
    assert omegaJ(1, 2, 0, 2, 0, strict=False).is_zero()


def test_omega_low_cases():
    b = basic_forms(1)
    assert omegaJ(1, 0, 0, 0, 0).evaluate([]) == ONE
    assert omegaJ(1, 0, 0, 1, 0) == b.w02
    assert omegaJ(1, 1, 0, 1, 0) == b.w11
    assert omegaJ(1, 1, 1, 1, 1) == b.w20


def test_phi00_n1():
    # phi_{0,0} = I* ^ pi_0^{0,0;1} = 2 I* ^ omega02
    b = basic_forms(1)
    assert kernelLow(1, 0, 0) == wedge(b.I, b.w02).scale(2)


def test_kernel_ranges():
    with pytest.raises(DomainError):
        kernelLow(1, 1, 1)
    with pytest.raises(DomainError):
        kernelHigh(1, 0, 1)
    with pytest.raises(DomainError):
        kernelReal(1, 4)


def test_build_kernel():
    assert build_kernel(KernelSpec("low", 2, p=1, q=0)) == kernelLow(2, 1, 0)
    assert build_kernel(KernelSpec("real", 1, k=2)) == kernelReal(1, 2)
    with pytest.raises(DomainError):
        build_kernel(KernelSpec("other", 1))


@pytest.mark.parametrize("n", [1, 2])
def test_rumin_conditions(n):
    model = buildModel(n)
    for p in range(n + 1):
        for q in range(n + 1 - p):
            f = kernelLow(n, p, q)
            assert pCodifferential(model, f).is_zero()
            assert pCodifferential(model, dP(model, f)).is_zero()
    for p in range(n + 2):
        for q in range(n + 2):
            if p + q > n:
                f = kernelHigh(n, p, q, Scalar(2), Scalar(0, 3))
                assert pCodifferential(model, f).is_zero()
                assert pCodifferential(model, dP(model, f)).is_zero()
                assert wedge(omegaM(n), f).is_zero()


def test_high_is_linear_in_parameters():
    a = kernelHigh(2, 2, 1, ONE, ZERO)
    b = kernelHigh(2, 2, 1, ZERO, ONE)
    assert kernelHigh(2, 2, 1, Scalar(3), I_UNIT) == a.scale(3) + b.scale(I_UNIT)


def test_boundary_kernel_vanishes():
    # phi^{1,0}_{p,n+1} is identically zero
    for n in (1, 2):
        for p in range(1, n + 2):
            assert kernelHigh(n, p, n + 1, ONE, ZERO).is_zero()


def test_conjugation_symmetry():
    for n in (1, 2):
        for p in range(n + 1):
            for q in range(n + 1 - p):
                assert conjugate(kernelLow(n, p, q)) == kernelLow(n, q, p)
        assert conjugate(kernelHigh(n, n, 1, Scalar(2), I_UNIT)) == kernelHigh(n, 1, n, -I_UNIT, Scalar(2))


def test_real_kernels_real():
    for n in (1, 2):
        for k in range(2 * n + 2):
            f = kernelReal(n, k)
            assert conjugate(f) == f
            assert not f.is_zero()


def test_lambda_and_params():
    n = 2
    assert lambda_pq(n, 0, 0) == 2 * I_UNIT * lambda_pq(n, 1, 0) * (n + 1)
    a, b = real_params(n, 2, 1)
    assert a and b
    assert [c_k(n, k) for k in range(5)] == [3, 2, 1, -2, -3]


def test_tilde_pi_is_closed():
    model = buildModel(1)
    for p, q, k, j in [(1, 1, 1, 1), (1, 1, 2, 0), (2, 1, 2, 1)]:
        assert dP(model, tildePiJ(1, p, q, k, j)).is_zero()


def test_kappa_mutation_hook():
    set_kappa_mutation(lambda p, q, k, j, v: v + 1)
    try:
        assert kappa(1, 1, 2, 0) == 3
    finally:
        set_kappa_mutation(None)
    assert kappa(1, 1, 2, 0) == 2
