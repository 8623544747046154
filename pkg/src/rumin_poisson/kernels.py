"""Combinatorial coefficients and the Poisson-kernel families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .calculus import basic_forms, dK, dP, delK
from .exterior import Multiform, power, wedge, wedge_all
from .lie_model import LieModel, buildModel
from .scalars import I_UNIT, ONE, ZERO, Scalar, as_scalar

__all__ = [
    "DomainError",
    "KappaIndex",
    "KernelSpec",
    "kappa",
    "set_kappa_mutation",
    "omegaJ",
    "piJ",
    "tildePiJ",
    "omegaM",
    "kernelLow",
    "kernelHigh",
    "kernelReal",
    "build_kernel",
    "high_coefficients",
    "c_k",
    "i_pow",
    "lambda_pq",
    "real_params",
]


class DomainError(ValueError):
    """Index or parameter outside the domain of a kernel family."""


_kappa_mutation = None


def set_kappa_mutation(fn) -> None:
    """Install ``fn(p, q, k, j, value) -> value`` to corrupt kappa (harness tests only).

    Pass None to restore the true coefficients.  Memo tables are flushed.
    """
    global _kappa_mutation
    _kappa_mutation = fn
    for memo in (_omega, _pi, _tpi, _kernel_low, _kernel_high, _kernel_real):
        memo.cache_clear()


def _binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def kappa(p: int, q: int, k: int, j: int) -> int:
    """kappa_j^{p,q;k} = C(k,p) C(p,j) C(k-p,q-j); zero if any binomial is undefined."""
    v = _binom(k, p) * _binom(p, j) * _binom(k - p, q - j)
    if _kappa_mutation is not None:
        v = _kappa_mutation(p, q, k, j, v)
    return v


def i_pow(e: int) -> Scalar:
    return (ONE, I_UNIT, -ONE, -I_UNIT)[e % 4]


@dataclass(frozen=True)
class KappaIndex:
    p: int
    q: int
    k: int
    j: int

    def admissible(self, n: int) -> bool:
        p, q, k, j = self.p, self.q, self.k, self.j
        if not (0 <= p <= n and 0 <= q <= n and 0 <= k - p <= n and 0 <= k - q <= n):
            return False
        return max(0, p + q - k) <= j <= min(p, q)


def _n(model) -> int:
    return model if isinstance(model, int) else model.n


def _model(model) -> LieModel:
    return buildModel(model) if isinstance(model, int) else model


def _check(n: int, p: int, q: int, k: int, j: int) -> None:
    if not KappaIndex(p, q, k, j).admissible(n):
        raise DomainError(f"inadmissible index (p,q,k,j)=({p},{q},{k},{j}) for n={n}")


@lru_cache(maxsize=None)
def _omega(n: int, p: int, q: int, k: int, j: int) -> Multiform:
    e = (j, k - (p + q) + j, p - j, q - j)
    if min(e) < 0:
        return Multiform.zero(n)
    b = basic_forms(n)
    return wedge_all(n, [power(b.w20, e[0]), power(b.w02, e[1]), power(b.w11, e[2]), power(b.w11bar, e[3])])


def omegaJ(model, p: int, q: int, k: int, j: int, strict: bool = True) -> Multiform:
    """omega_j^{p,q;k}.  With strict=False, indices with a negative exponent give 0."""
    n = _n(model)
    if strict:
        _check(n, p, q, k, j)
    return _omega(n, p, q, k, j)


@lru_cache(maxsize=None)
def _pi_factors(n: int) -> dict[str, Multiform]:
    model = buildModel(n)
    b = basic_forms(n)
    two = Scalar(2)
    return {
        "dPI": dP(model, b.I),
        "ddw11": dK(model, dP(model, b.w11)).scale(two),
        "dPZ": dP(model, b.Z),
        "dPZb": dP(model, b.Zbar),
        "2idKZ": dK(model, b.Z).scale(two * I_UNIT),
    }


@lru_cache(maxsize=None)
def _pi(n: int, p: int, q: int, k: int, j: int) -> Multiform:
    e = (k - (p + q), j, p - j, q - j)
    if min(e) < 0:
        return Multiform.zero(n)
    f = _pi_factors(n)
    return wedge_all(n, [power(f["dPI"], e[0]), power(f["ddw11"], e[1]), power(f["dPZ"], e[2]), power(f["dPZb"], e[3])])


@lru_cache(maxsize=None)
def _tpi(n: int, p: int, q: int, k: int, j: int) -> Multiform:
    e = (j, k - (p + q) + j, p - j, q - j)
    if min(e) < 0:
        return Multiform.zero(n)
    f = _pi_factors(n)
    return wedge_all(n, [power(f["2idKZ"], e[0]), power(f["dPI"], e[1]), power(f["dPZ"], e[2]), power(f["dPZb"], e[3])])


def piJ(model, p: int, q: int, k: int, j: int, strict: bool = True) -> Multiform:
    """pi_j^{p,q;k} for 0 <= j <= min(p,q) and k >= p+q."""
    n = _n(model)
    if strict and not (0 <= j <= min(p, q) and k >= p + q and p >= 0 and q >= 0):
        raise DomainError(f"pi index (p,q,k,j)=({p},{q},{k},{j}) out of range")
    return _pi(n, p, q, k, j)


def tildePiJ(model, p: int, q: int, k: int, j: int, strict: bool = True) -> Multiform:
    """tilde pi_j^{p,q;k} for max(0, p+q-k) <= j <= min(p,q)."""
    n = _n(model)
    if strict and not (max(0, p + q - k) <= j <= min(p, q)):
        raise DomainError(f"tilde pi index (p,q,k,j)=({p},{q},{k},{j}) out of range")
    return _tpi(n, p, q, k, j)


def omegaM(model) -> Multiform:
    """Pullback of the Kaehler form of G/K: (omega20 + i Z* ^ Zbar*)/2."""
    b = basic_forms(_n(model))
    return (b.w20 + wedge(b.Z, b.Zbar).scale(I_UNIT)).scale(Scalar(Fraction(1, 2)))


# kernels ---------------------------------------------------------------


@lru_cache(maxsize=None)
def _kernel_low(n: int, p: int, q: int) -> Multiform:
    b = basic_forms(n)
    acc = Multiform.zero(n)
    for j in range(0, min(p, q) + 1):
        c = kappa(p, q, n + 1, j)
        if c:
            acc = acc + wedge(b.I, _pi(n, p, q, n, j)).scale(Scalar(c))
    return acc


def kernelLow(model, p: int, q: int) -> Multiform:
    n = _n(model)
    if p < 0 or q < 0:
        raise DomainError("p and q must be non-negative")
    if p + q > n:
        raise DomainError(f"p+q={p + q} > n={n}: use kernelHigh for the upper range")
    return _kernel_low(n, p, q)


def high_coefficients(n: int, p: int, q: int, j: int, alpha: Scalar, beta: Scalar):
    """(alpha_j, beta_j, gamma_j, delta_j) of the upper-range kernel."""
    den = Fraction(1, p + q - n)
    a_j = alpha * kappa(p, q + 1, n + 1, j + 1)
    b_j = beta * kappa(p + 1, q, n + 1, j + 1)
    g_j = (alpha * (p + 1) + beta * (q + 1)) * den * kappa(p + 1, q + 1, n + 1, j + 1)
    d_j = -((alpha * (n + 1 - q) + beta * (n + 1 - p)) * (n + 1)) * den * kappa(p, q, n, j + 1)
    return a_j, b_j, g_j, d_j


@lru_cache(maxsize=None)
def _kernel_high(n: int, p: int, q: int, alpha: Scalar, beta: Scalar) -> Multiform:
    b = basic_forms(n)
    IZZb = wedge_all(n, [b.I, b.Z, b.Zbar]).scale(2 * I_UNIT)
    acc = Multiform.zero(n)
    for j in range(-2, min(p, q) + 2):
        a_j, b_j, g_j, d_j = high_coefficients(n, p, q, j, alpha, beta)
        if a_j:
            acc = acc + wedge(b.Z, _tpi(n, p - 1, q, n, j)).scale(a_j)
        if b_j:
            acc = acc + wedge(b.Zbar, _tpi(n, p, q - 1, n, j)).scale(b_j)
        if g_j:
            acc = acc + wedge(b.I, _tpi(n, p, q, n, j)).scale(g_j)
        if d_j:
            acc = acc + wedge(IZZb, _tpi(n, p - 1, q - 1, n - 1, j)).scale(d_j)
    return acc


def kernelHigh(model, p: int, q: int, alpha=ONE, beta=ZERO) -> Multiform:
    n = _n(model)
    if not (0 <= p <= n + 1 and 0 <= q <= n + 1):
        raise DomainError(f"p, q must lie in 0..{n + 1}")
    if p + q <= n:
        raise DomainError(f"p+q={p + q} <= n={n}: use kernelLow for the lower range")
    return _kernel_high(n, p, q, as_scalar(alpha), as_scalar(beta))


def lambda_pq(n: int, p: int, q: int) -> Scalar:
    k = p + q
    return i_pow(q - p) * Fraction(factorial(n + 1 - p) * factorial(n + 1 - q), 2**k)


def _fact(m: int) -> int | None:
    return factorial(m) if m >= 0 else None


def real_params(n: int, p: int, q: int) -> tuple[Scalar, Scalar]:
    """(alpha_{p,q}, beta_{p,q}); a parameter whose factorial is undefined is 0."""
    k = p + q
    out = []
    for f1, f2 in ((n + 1 - p, n - q), (n - p, n - q + 1)):
        a, b = _fact(f1), _fact(f2)
        if a is None or b is None:
            out.append(ZERO)
        else:
            out.append(i_pow(q - p) * Fraction(a * b, 2 ** (k + 1)))
    return out[0], out[1]


def c_k(n: int, k: int) -> int:
    return n - k + 1 if k <= n else n - k - 1


@lru_cache(maxsize=None)
def _kernel_real(n: int, k: int) -> Multiform:
    acc = Multiform.zero(n)
    for p in range(0, k + 1):
        q = k - p
        if p > n + 1 or q > n + 1:
            continue
        if k <= n:
            acc = acc + _kernel_low(n, p, q).scale(lambda_pq(n, p, q))
        else:
            a, b = real_params(n, p, q)
            acc = acc + _kernel_high(n, p, q, a, b)
    return acc


def kernelReal(model, k: int) -> Multiform:
    n = _n(model)
    if not 0 <= k <= 2 * n + 1:
        raise DomainError(f"k={k} outside 0..{2 * n + 1}")
    return _kernel_real(n, k)


@dataclass(frozen=True)
class KernelSpec:
    family: str
    n: int
    p: int | None = None
    q: int | None = None
    k: int | None = None
    alpha: Scalar = ONE
    beta: Scalar = ZERO


def build_kernel(spec: KernelSpec) -> Multiform:
    if spec.family == "low":
        return kernelLow(spec.n, spec.p, spec.q)
    if spec.family == "high":
        return kernelHigh(spec.n, spec.p, spec.q, spec.alpha, spec.beta)
    if spec.family == "real":
        return kernelReal(spec.n, spec.k)
    raise DomainError(f"unknown kernel family {spec.family!r}")
