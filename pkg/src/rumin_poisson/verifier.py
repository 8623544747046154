"""Named check registry, report model and report export.

Every check cites one anchor from ``ANCHORS`` (or is marked plumbing) and
declares how a mismatch is classified:

* ``identity``: a machine-derivable identity; a mismatch is ``fail``.
* ``printed``: a coefficient or formula as printed; a mismatch is
  ``discrepancy``, reported with a witness for a human to adjudicate.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Callable

from . import __version__
from .calculus import (
    basic_forms,
    d_raw,
    dK,
    dP,
    delK,
    delKbar,
    invariantSubspace,
    is_invariant,
    pCodifferential,
)
from .exterior import Multiform, Stratum, conjugate, insert, layout, power, project, wedge, wedge_all
from .hodge import (
    delBarStarK,
    delStarK,
    deltaK,
    gK,
    hodgeStarK,
    hodgeStarKInverse,
    lefschetzK,
    lefschetzKAdjoint,
    lefschetzKAdjointLiteral,
    pairingK,
    starSquareSigns,
)
from .kernels import (
    c_k,
    high_coefficients,
    kappa,
    kernelHigh,
    kernelLow,
    kernelReal,
    lambda_pq,
    omegaJ,
    omegaM,
    piJ,
    real_params,
    tildePiJ,
)
from .kostant import adjointPairingCheck, homologyRanks, kostantCodiff, pplus, techCodiff, wedge_pp
from .lie_model import (
    ConfigurationError,
    LieModel,
    buildModel,
    commutator,
    mat_add,
    mat_mul,
    mat_scale,
    pairingB,
    sigma,
    trace,
    unit,
)
from .linalg import nullspace
from .scalars import I_UNIT, ONE, ZERO, Scalar

__all__ = [
    "ANCHORS",
    "REQUIRED_ANCHORS",
    "SUITES",
    "STATUSES",
    "Check",
    "CheckResult",
    "Report",
    "registry",
    "runSuite",
    "run_suite",
    "exportReport",
    "report_to_json",
    "report_to_text",
    "load_report",
    "missing_anchors",
]

STATUSES = ("pass", "fail", "discrepancy", "skipped")
PLUMBING = "plumbing"

# Anchor keys are neutral labels for the statements being checked.
ANCHORS: dict[str, str] = {
    "quotient-structure": "matrix model of g, its grading, the pairing table and g_K",
    "hodge-conventions": "K-Hodge star, its inverse and the K-Lefschetz adjoint",
    "kostant-codifferential": "alternating bracket formula for the Kostant codifferential",
    "kostant-dual-formula": "codifferential as 1/2 sum nu_+ ^ i_[eta_s,nu_-] i_xi_s",
    "kostant-adjointness": "(d* a) ^ b = (-1)^k a ^ d* b in top degree",
    "homology-bundles": "surjectivity / injectivity of the induced map on Lambda H*",
    "basic-two-forms": "the four basic invariant two-forms: types and values",
    "one-form-derivatives": "partial derivatives of I*, Z*, Zbar*",
    "two-form-derivatives": "partial derivatives of the basic two-forms",
    "vertical-codifferential": "vertical codifferential as I* ^ sum i(G^{0,1}) i(G^{1,0})",
    "omega-family": "the forms omega_j^{p,q;k}: types and trivial insertions",
    "omega-relation": "sum_j kappa_j omega_j = 0 for k > n",
    "kappa-recursion": "linear recursion characterizing kappa_j",
    "vertical-codifferential-omega": "vertical codifferential of omega_j^{p,q;k}",
    "low-kernel-conditions": "kernels phi_{p,q} for p+q <= n",
    "high-kernel-conditions": "kernels phi_{p,q}^{alpha,beta} for p+q > n",
    "low-kernel-properties": "coclosed and primitive images for p+q <= n",
    "high-kernel-properties": "coprimitivity and parameter dependence for p+q > n",
    "high-kernel-derivative-relation": "-2i(n+1-p) del_K phi_{p-1,q}^{0,b} = (p+q-n) d_P phi_{p,q}^{0,b}",
    "high-kernel-codifferential-relation": "del*_K phi_{p+1,q}^{a,0} = delbar*_K phi_{p,q+1}^{0,a}",
    "real-kernel-image": "real kernels: reality, coclosed, (co)primitive",
    "real-kernel-ladder": "real kernels: d_K phi_k = c_k d_P phi_{k+1}",
    "star-omega-formula": "insertions into *_K omega_{p+q-k}^{p,q;k} with the sign-factor epsilon",
    "wedge-star-omega11": "omega11 ^ *_K omega_j",
    "wedge-star-omega11bar": "omega11bar ^ *_K omega_j",
    "wedge-star-omega20": "omega20 ^ *_K omega_j",
    "k-codiff-ZZbar": "del*_K(Z* ^ Zbar* ^ omega_j)",
    "k-codiff-Z": "del*_K(Z* ^ omega_j)",
    "k-codiff-Zbar": "del*_K(Zbar* ^ omega_j)",
    "k-codiff-I": "del*_K(I* ^ omega_j)",
    "k-codiff-IZZbar": "del*_K(I* ^ Z* ^ Zbar* ^ omega_j)",
    "lefschetz-adjoint-omega": "L*_K omega_j",
    "lefschetz-adjoint-Z": "L*_K(Z* ^ omega_j)",
    "lefschetz-adjoint-Zbar": "L*_K(Zbar* ^ omega_j)",
    "lefschetz-adjoint-I": "L*_K(I* ^ omega_j)",
    "lefschetz-adjoint-IZZbar": "L*_K(I* ^ Z* ^ Zbar* ^ omega_j)",
    "invariance": "all constructed forms are m-invariant",
}

# Closed list of anchors that must each carry at least one check.
REQUIRED_ANCHORS: tuple[str, ...] = (
    "kostant-codifferential",
    "kostant-dual-formula",
    "kostant-adjointness",
    "homology-bundles",
    "basic-two-forms",
    "one-form-derivatives",
    "two-form-derivatives",
    "vertical-codifferential",
    "omega-relation",
    "kappa-recursion",
    "vertical-codifferential-omega",
    "low-kernel-conditions",
    "high-kernel-conditions",
    "low-kernel-properties",
    "high-kernel-properties",
    "high-kernel-derivative-relation",
    "high-kernel-codifferential-relation",
    "real-kernel-image",
    "real-kernel-ladder",
    "star-omega-formula",
    "wedge-star-omega11",
    "wedge-star-omega11bar",
    "wedge-star-omega20",
    "k-codiff-ZZbar",
    "k-codiff-Z",
    "k-codiff-Zbar",
    "k-codiff-I",
    "k-codiff-IZZbar",
    "lefschetz-adjoint-omega",
    "lefschetz-adjoint-Z",
    "lefschetz-adjoint-Zbar",
    "lefschetz-adjoint-I",
    "lefschetz-adjoint-IZZbar",
)

SUITES = (
    "structure",
    "basic-forms",
    "kostant",
    "homology",
    "kappa",
    "codiff-p",
    "low",
    "high",
    "real",
    "appendix",
    "invariance",
)

HIGH_PARAMS = ((ONE, ZERO), (ZERO, ONE), (Scalar(2), Scalar(0, 3)))
WITNESS_TERMS = 12


# --------------------------------------------------------------------------
# model


@dataclass(frozen=True)
class Context:
    n: int
    model: LieModel
    seed: int

    def rng(self, check_id: str) -> random.Random:
        # string seeds hash through sha512, so this is stable across runs
        return random.Random(f"{self.seed}/{check_id}")


@dataclass(frozen=True)
class Outcome:
    ok: bool
    checked: int
    witness: dict | None = None


@dataclass(frozen=True)
class Check:
    id: str
    suite: str
    anchor: str
    kind: str
    runner: Callable[[Context], Outcome]
    min_n: int = 1


@dataclass
class CheckResult:
    id: str
    paper_ref: str
    status: str
    elapsed_ms: float | None = None
    witness: dict | None = None

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "id": self.id,
            "paper_ref": self.paper_ref,
            "status": self.status,
            "elapsed_ms": round(self.elapsed_ms, 3) if timings and self.elapsed_ms is not None else None,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    n: int
    suite: str
    version: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        tally = {s: 0 for s in STATUSES}
        for c in self.checks:
            tally[c.status] += 1
        return tally

    def failed(self, strict: bool = False) -> bool:
        bad = {"fail", "discrepancy"} if strict else {"fail"}
        return any(c.status in bad for c in self.checks)

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "n": self.n,
            "suite": self.suite,
            "version": self.version,
            "checks": [c.to_dict(timings) for c in sorted(self.checks, key=lambda c: c.id)],
            "summary": self.summary,
        }


_REGISTRY: dict[str, Check] = {}


def check(id: str, suite: str, anchor: str, kind: str = "identity", min_n: int = 1):
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if anchor != PLUMBING and anchor not in ANCHORS:
        raise ValueError(f"unknown anchor {anchor!r}")
    if kind not in ("identity", "printed"):
        raise ValueError(f"unknown kind {kind!r}")

    def deco(fn):
        if id in _REGISTRY:
            raise ValueError(f"duplicate check id {id!r}")
        _REGISTRY[id] = Check(id, suite, anchor, kind, fn, min_n)
        return fn

    return deco


def registry() -> dict[str, Check]:
    return dict(sorted(_REGISTRY.items()))


def missing_anchors() -> list[str]:
    covered = {c.anchor for c in _REGISTRY.values()}
    return [a for a in REQUIRED_ANCHORS if a not in covered]


# --------------------------------------------------------------------------
# comparison helpers


def _idx(d: dict) -> dict:
    return {k: (str(v) if isinstance(v, Scalar) else v) for k, v in d.items()}


class Tally:
    """Counts comparisons and keeps the first few mismatches."""

    def __init__(self, keep: int = 3):
        self.checked = 0
        self.failures = 0
        self.keep = keep
        self.examples: list[dict] = []

    def _miss(self, entry: dict) -> None:
        self.failures += 1
        if len(self.examples) < self.keep:
            self.examples.append(entry)

    def forms(self, lhs: Multiform, rhs: Multiform, **index) -> bool:
        self.checked += 1
        if lhs == rhs:
            return True
        diff = (lhs - rhs).serialize()
        self._miss(
            {
                "index": _idx(index),
                "difference_terms": len(diff),
                "difference": diff[:WITNESS_TERMS],
            }
        )
        return False

    def zero(self, a: Multiform, **index) -> bool:
        return self.forms(a, Multiform.zero(a.n), **index)

    def scalars(self, actual, expected, **index) -> bool:
        self.checked += 1
        if actual == expected:
            return True
        self._miss({"index": _idx(index), "actual": str(actual), "expected": str(expected)})
        return False

    def truth(self, ok: bool, **info) -> bool:
        self.checked += 1
        if not ok:
            self._miss({"index": _idx(info)})
        return ok

    def outcome(self, **extra) -> Outcome:
        if self.failures == 0:
            return Outcome(True, self.checked)
        w = {"checked": self.checked, "mismatches": self.failures, "examples": self.examples}
        w.update(extra)
        return Outcome(False, self.checked, w)


def _gauss(rng: random.Random) -> Scalar:
    return Scalar(
        Fraction(rng.randint(-7, 7), rng.randint(1, 7)),
        Fraction(rng.randint(-7, 7), rng.randint(1, 7)),
    )


def _cvec(rng: random.Random, n: int) -> list[Scalar]:
    return [_gauss(rng) for _ in range(n)]


def _herm(X, Y) -> Scalar:
    acc = ZERO
    for x, y in zip(X, Y):
        acc = acc + x * y.conjugate()
    return acc


def _holo(ids, X) -> dict:
    return {i: x for i, x in zip(ids, X) if x}


def _anti(ids, X) -> dict:
    return {i: x.conjugate() for i, x in zip(ids, X) if x}


def _ratio(a: Multiform, b: Multiform):
    """The scalar r with a == r b, or None."""
    if b.is_zero():
        return ZERO if a.is_zero() else None
    m, c = next(iter(b.terms.items()))
    r = a.terms.get(m, ZERO) / c
    return r if a == b.scale(r) else None


def _seq_insert(vectors, a: Multiform) -> Multiform:
    for v in reversed(vectors):
        a = insert(v, a)
    return a


def omega_indices(n: int):
    """All admissible (p, q, k, j) for omega_j^{p,q;k}."""
    for k in range(0, 2 * n + 1):
        for p in range(n + 1):
            for q in range(n + 1):
                if 0 <= k - p <= n and 0 <= k - q <= n:
                    for j in range(max(0, p + q - k), min(p, q) + 1):
                        yield p, q, k, j


def pqk_indices(n: int):
    for k in range(0, 2 * n + 1):
        for p in range(n + 1):
            for q in range(n + 1):
                if 0 <= k - p <= n and 0 <= k - q <= n:
                    yield p, q, k


def low_pairs(n: int):
    return [(p, q) for p in range(n + 1) for q in range(n + 1 - p)]


def high_pairs(n: int):
    return [(p, q) for p in range(n + 2) for q in range(n + 2) if p + q > n]


def _W(n):
    return lambda p, q, k, j: omegaJ(n, p, q, k, j, strict=False)


# --------------------------------------------------------------------------
# structure


def _sl_basis(n: int):
    size = n + 2
    out = []
    for a in range(size):
        for b in range(size):
            if a != b:
                out.append(unit(a, b))
    for a in range(1, size):
        out.append(mat_add(unit(0, 0), unit(a, a), -ONE))
    return out


@check("model.jacobi", "structure", "quotient-structure")
def _c_jacobi(ctx: Context) -> Outcome:
    t = Tally()
    basis = _sl_basis(ctx.n)
    for a, b, c in combinations(range(len(basis)), 3):
        A, B, C = basis[a], basis[b], basis[c]
        s = mat_add(
            mat_add(commutator(A, commutator(B, C)), commutator(B, commutator(C, A))),
            commutator(C, commutator(A, B)),
        )
        t.truth(not s, triple=[a, b, c])
    return t.outcome()


def _grade(n: int, i: int, j: int) -> int:
    g = [1] + [0] * n + [-1]
    return g[i] - g[j]


@check("model.grading", "structure", "quotient-structure")
def _c_grading(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    size = n + 2
    E = model.E
    for a in range(size):
        for b in range(size):
            if a == b:
                continue
            g = _grade(n, a, b)
            t.truth(commutator(E, unit(a, b)) == mat_scale(unit(a, b), Scalar(g)), entry=[a, b])
            for c in range(size):
                for d in range(size):
                    if c == d:
                        continue
                    br = commutator(unit(a, b), unit(c, d))
                    h = g + _grade(n, c, d)
                    ok = all(_grade(n, x, y) == h for (x, y) in br if x != y) and (
                        h == 0 or all(x != y for (x, y) in br)
                    )
                    t.truth(ok, pair=[[a, b], [c, d]])
    return t.outcome()


@check("model.real_form", "structure", "quotient-structure")
def _c_real_form(ctx: Context) -> Outcome:
    """The conjugation fixing su(n+1,1) acts on generators as the conjugation permutation."""
    model, lay = ctx.model, ctx.model.layout
    t = Tally()
    for u in range(lay.dim):
        img = model.project(sigma(model, model.reps[u]))
        t.truth(img == {lay.conj_perm[u]: ONE}, generator=lay.names[u])
    return t.outcome()


def _xi_minus(n, X):
    last = n + 1
    A = {}
    for s, x in enumerate(X, start=1):
        if x:
            A[(s, 0)] = x
            A[(last, s)] = -x.conjugate()
    return A


def _xi_plus(n, Y):
    last = n + 1
    A = {}
    for s, y in enumerate(Y, start=1):
        if y:
            A[(0, s)] = -y.conjugate()
            A[(s, last)] = y
    return A


@check("model.pairing.grading_element", "structure", "quotient-structure", "printed")
def _c_pair_e(ctx: Context) -> Outcome:
    t = Tally()
    t.scalars(pairingB(ctx.model, ctx.model.E, ctx.model.E), Scalar(2))
    return t.outcome()


@check("model.pairing.g1", "structure", "quotient-structure", "printed")
def _c_pair_g1(ctx: Context) -> Outcome:
    """B(X, Y) = -2<X, Y> as a real pairing, i.e. -2 Re<X, Y>."""
    n = ctx.n
    rng = ctx.rng("model.pairing.g1")
    t = Tally()
    for trial in range(50):
        X, Y = _cvec(rng, n), _cvec(rng, n)
        expected = Scalar(-2 * _herm(X, Y).re)
        t.scalars(trace(mat_mul(_xi_minus(n, X), _xi_plus(n, Y))), expected, trial=trial)
    return t.outcome()


@check("model.pairing.g2", "structure", "quotient-structure", "printed")
def _c_pair_g2(ctx: Context) -> Outcome:
    """B(x, y) = -xy for x, y in iR, read with x, y the matrix entries."""
    n = ctx.n
    last = n + 1
    t = Tally()
    for a in (1, 2, -3):
        for b in (1, 5, -2):
            x, y = Scalar(0, a), Scalar(0, b)
            val = trace(mat_mul({(last, 0): x}, {(0, last): y}))
            t.scalars(val, -(x * y), x=x, y=y)
    return t.outcome(note="the trace form gives +xy on g_-2 x g_2")


@check("model.pairing.m", "structure", "quotient-structure", "printed")
def _c_pair_m(ctx: Context) -> Outcome:
    """B((b1,B1),(b2,B2)) = b1 b2 + tr(B1 B2) on m."""
    n, model = ctx.n, ctx.model
    last = n + 1
    t = Tally()
    samples = []
    for s in range(1, n + 1):
        # element (B, b) = (diag with i at s, b) with 2b + tr B = 0
        B = {(s, s): Scalar(0, 2)}
        b = Scalar(0, -1)
        samples.append((B, b))
    for (B1, b1), (B2, b2) in combinations(samples + samples[:1], 2):
        A1 = dict(B1)
        A1[(0, 0)] = b1
        A1[(last, last)] = b1
        A2 = dict(B2)
        A2[(0, 0)] = b2
        A2[(last, last)] = b2
        tr12 = trace(mat_mul(B1, B2))
        t.scalars(pairingB(model, A1, A2), b1 * b2 + tr12)
    return t.outcome(note="the trace form gives 2 b1 b2 + tr(B1 B2) on m")


@check("model.gK", "structure", "quotient-structure", "printed")
def _c_gK(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    lay = model.layout
    rng = ctx.rng("model.gK")
    t = Tally()
    t.scalars(gK(model, lay.z, lay.zbar), ONE, pair="Z,Zbar")
    f10 = [lay.f10(s) for s in range(1, n + 1)]
    f01 = [lay.f01(s) for s in range(1, n + 1)]
    for trial in range(50):
        X, Y = _cvec(rng, n), _cvec(rng, n)
        t.scalars(gK(model, _holo(f10, X), _anti(f01, Y)), _herm(X, Y) * Scalar(Fraction(1, 2)), trial=trial)
        t.scalars(gK(model, _holo(f10, X), _holo(f10, Y)), ZERO, trial=trial, pair="F10,F10")
    return t.outcome()


@check("calculus.d_squared", "structure", PLUMBING)
def _c_dsq(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for name, f in basic_forms(n).as_dict().items():
        t.zero(d_raw(model, d_raw(model, f)), form=name)
        t.forms(dK(model, f) + dP(model, f), d_raw(model, f), form=name, split="dK+dP")
        t.forms(delK(model, f) + delKbar(model, f), dK(model, f), form=name, split="delK+delKbar")
    for p, q in low_pairs(n):
        t.zero(d_raw(model, d_raw(model, kernelLow(n, p, q))), kernel="low", p=p, q=q)
    return t.outcome()


@check("hodge.volume", "structure", "hodge-conventions")
def _c_volume(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    t = Tally()
    t.forms(hodgeStarK(model, Multiform.one(n)), b.volK, form="*1")
    t.scalars(pairingK(b.volK, b.volK), ONE, form="<vol,vol>")
    return t.outcome()


def _k_monomials(n: int):
    lay = layout(n)
    return list(range(lay.k_mask + 1))


@check("hodge.star_characterization", "structure", "hodge-conventions")
def _c_star_char(ctx: Context) -> Outcome:
    """a ^ *b = <a, b> vol_K on random pairs of K-monomials."""
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    rng = ctx.rng("hodge.star_characterization")
    monos = _k_monomials(n)
    t = Tally()
    for trial in range(200):
        ma = rng.choice(monos)
        mb = rng.choice([m for m in monos if bin(m).count("1") == bin(ma).count("1")])
        A = Multiform(n, {ma: ONE})
        B = Multiform(n, {mb: ONE})
        t.forms(wedge(A, hodgeStarK(model, B)), b.volK.scale(pairingK(A, B)), trial=trial)
    return t.outcome()


@check("hodge.star_inverse_claim", "structure", "hodge-conventions", "printed")
def _c_star_inverse(ctx: Context) -> Outcome:
    """The inverse of *_K is -*_K, i.e. *_K^2 = -1 in every degree."""
    signs = starSquareSigns(ctx.model)
    t = Tally()
    for d, s in signs.items():
        t.scalars(s, -1, k_degree=d)
    return t.outcome(star_square_signs={str(k): v for k, v in signs.items()})


@check("hodge.lefschetz_adjoint", "structure", "hodge-conventions")
def _c_lef_adj(ctx: Context) -> Outcome:
    """<L a, b> = <a, L* b> for the adjoint *^{-1} L *."""
    n, model = ctx.n, ctx.model
    rng = ctx.rng("hodge.lefschetz_adjoint")
    monos = _k_monomials(n)
    t = Tally()
    for trial in range(100):
        ma = rng.choice(monos)
        deg = bin(ma).count("1") + 2
        cands = [m for m in monos if bin(m).count("1") == deg]
        if not cands:
            continue
        A = Multiform(n, {ma: ONE})
        B = Multiform(n, {rng.choice(cands): ONE})
        t.scalars(pairingK(lefschetzK(model, A), B), pairingK(A, lefschetzKAdjoint(model, B)), trial=trial)
    return t.outcome()


@check("hodge.lefschetz_adjoint_literal", "structure", "hodge-conventions", "printed")
def _c_lef_lit(ctx: Context) -> Outcome:
    """The sandwich -* L_K * agrees with the adjoint of L_K."""
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q, k, j in omega_indices(n):
        w = omegaJ(n, p, q, k, j)
        for name, f in (("omega", w), ("I^omega", wedge(basic_forms(n).I, w))):
            t.forms(lefschetzKAdjointLiteral(model, f), lefschetzKAdjoint(model, f), p=p, q=q, k=k, j=j, form=name)
    return t.outcome()


# --------------------------------------------------------------------------
# basic forms


def _table_vectors(lay, n, X, Y, kind):
    f10 = [lay.f10(s) for s in range(1, n + 1)]
    f01 = [lay.f01(s) for s in range(1, n + 1)]
    g10 = [lay.g10(s) for s in range(1, n + 1)]
    g01 = [lay.g01(s) for s in range(1, n + 1)]
    if kind == "omega20":
        return _holo(f10, X), _anti(f01, Y)
    if kind == "omega11":
        return _holo(f10, X), _anti(g01, Y)
    if kind == "omega11bar":
        return _anti(f01, X), _holo(g10, Y)
    return _holo(g10, X), _anti(g01, Y)


_TABLE_VALUES = {
    "omega20": Scalar(0, Fraction(-1, 2)),
    "omega11": Scalar(Fraction(1, 2)),
    "omega11bar": Scalar(Fraction(1, 2)),
    "omega02": Scalar(0, Fraction(-1, 2)),
}


def _table_check(form_name: str):
    cid = f"basic2forms.{form_name}.value"

    @check(cid, "basic-forms", "basic-two-forms", "printed")
    def run(ctx: Context) -> Outcome:
        n, lay = ctx.n, ctx.model.layout
        form = basic_forms(n).as_dict()[form_name]
        rng = ctx.rng(cid)
        t = Tally()
        for trial in range(50):
            X, Y = _cvec(rng, n), _cvec(rng, n)
            u, v = _table_vectors(lay, n, X, Y, form_name)
            actual = form.evaluate([u, v])
            t.scalars(
                actual, _TABLE_VALUES[form_name] * _herm(X, Y), trial=trial,
                X=[str(x) for x in X], Y=[str(y) for y in Y],
            )
        # what the engine gives at the unit vector, for adjudication
        e = [ONE] + [ZERO] * (n - 1)
        u, v = _table_vectors(lay, n, e, e, form_name)
        return t.outcome(engine_value_at_e1=str(form.evaluate([u, v])), printed=str(_TABLE_VALUES[form_name]))

    return run


for _name in _TABLE_VALUES:
    _table_check(_name)


@check("basic2forms.types", "basic-forms", "basic-two-forms", "printed")
def _c_types(ctx: Context) -> Outcome:
    n = ctx.n
    b = basic_forms(n)
    lay = ctx.model.layout
    want = {
        "omega20": ((2, 0), (1, 1), (0, 0)),
        "omega11": ((1, 1), (1, 0), (0, 1)),
        "omega11bar": ((1, 1), (0, 1), (1, 0)),
        "omega02": ((0, 2), (0, 0), (1, 1)),
    }
    t = Tally()
    for name, (bideg, kt, pt) in want.items():
        f = b.as_dict()[name]
        strata = {(s.bidegree, s.k_type, s.p_type) for s in f.strata()}
        t.truth(strata == {(bideg, kt, pt)}, form=name, strata=sorted(map(str, strata)))
        for g in (lay.i, lay.z, lay.zbar):
            t.zero(insert(g, f), form=name, inserted=lay.names[g])
    return t.outcome()


@check("basic2forms.conjugation", "basic-forms", "basic-two-forms")
def _c_conj(ctx: Context) -> Outcome:
    b = basic_forms(ctx.n)
    t = Tally()
    t.forms(conjugate(b.w11), b.w11bar, form="omega11")
    t.forms(conjugate(b.w20), b.w20, form="omega20")
    t.forms(conjugate(b.w02), b.w02, form="omega02")
    t.forms(conjugate(b.Z), b.Zbar, form="Z*")
    return t.outcome()


def _derivative_checks():
    i = I_UNIT
    one = {
        "delK_Z": lambda m, b: (delK(m, b.Z), Multiform.zero(b.n)),
        "dP_Z": lambda m, b: (dP(m, b.Z), b.w11.scale(2) + wedge(b.Z, b.I).scale(2 * i)),
        "delK_Zbar": lambda m, b: (delK(m, b.Zbar), wedge(b.Zbar, b.Z) + b.w20.scale(i)),
        "dP_Zbar": lambda m, b: (dP(m, b.Zbar), b.w11bar.scale(2) - wedge(b.Zbar, b.I).scale(2 * i)),
        "delK_I": lambda m, b: (delK(m, b.I), wedge(b.Z, b.I)),
        "dP_I": lambda m, b: (dP(m, b.I), b.w02.scale(2)),
        "dKdP_Z": lambda m, b: (dK(m, dP(m, b.Z)), Multiform.zero(b.n)),
        "dKdP_Zbar": lambda m, b: (dK(m, dP(m, b.Zbar)), Multiform.zero(b.n)),
    }
    two = {
        "delK_omega20": lambda m, b: (delK(m, b.w20), -wedge(b.Z, b.w20)),
        "dP_omega20": lambda m, b: (
            dP(m, b.w20),
            wedge(b.Z, b.w11bar).scale(2 * i) - wedge(b.Zbar, b.w11).scale(2 * i),
        ),
        "delK_omega11": lambda m, b: (delK(m, b.w11), Multiform.zero(b.n)),
        "dP_omega11": lambda m, b: (
            dP(m, b.w11),
            wedge(b.Z, b.w02).scale(2 * i) - wedge(b.I, b.w11).scale(2 * i),
        ),
        "delK_omega11bar": lambda m, b: (delK(m, b.w11bar), -wedge(b.I, b.w20)),
        "dP_omega11bar": lambda m, b: (
            dP(m, b.w11bar),
            wedge(b.I, b.w11bar).scale(2 * i) - wedge(b.Zbar, b.w02).scale(2 * i),
        ),
        "delK_omega02": lambda m, b: (delK(m, b.w02), wedge(b.Z, b.w02) - wedge(b.I, b.w11)),
        "dP_omega02": lambda m, b: (dP(m, b.w02), Multiform.zero(b.n)),
    }
    for table, anchor in ((one, "one-form-derivatives"), (two, "two-form-derivatives")):
        for name, fn in table.items():
            _register_derivative(name, anchor, fn)


def _register_derivative(name, anchor, fn):
    @check(f"derivatives.{name}", "basic-forms", anchor, "printed")
    def run(ctx: Context) -> Outcome:
        lhs, rhs = fn(ctx.model, basic_forms(ctx.n))
        t = Tally()
        t.forms(lhs, rhs, identity=name)
        return t.outcome()


_derivative_checks()


@check("derivatives.dK_Z", "basic-forms", "one-form-derivatives", "printed")
def _c_dKZ(ctx: Context) -> Outcome:
    b = basic_forms(ctx.n)
    t = Tally()
    t.forms(dK(ctx.model, b.Z), wedge(b.Z, b.Zbar) - b.w20.scale(I_UNIT))
    return t.outcome()


# --------------------------------------------------------------------------
# Kostant codifferential and homology


def _random_pp(rng, pp, terms=4):
    out = {}
    for _ in range(terms):
        k = rng.randint(0, pp.dim)
        monos = pp.all_monomials(k)
        m = rng.choice(monos)
        out[m] = out.get(m, ZERO) + _gauss(rng)
    return {m: c for m, c in out.items() if c}


@check("kostant.def_vs_dual", "kostant", "kostant-dual-formula")
def _c_kostant_tech(ctx: Context) -> Outcome:
    pp = pplus(ctx.n)
    t = Tally()
    if ctx.n <= 2:
        for k in range(pp.dim + 1):
            for m in pp.all_monomials(k):
                t.truth(kostantCodiff(pp, {m: ONE}) == techCodiff(pp, {m: ONE}), monomial=m)
    else:
        rng = ctx.rng("kostant.def_vs_dual")
        for trial in range(200):
            b = _random_pp(rng, pp)
            t.truth(kostantCodiff(pp, b) == techCodiff(pp, b), trial=trial)
    return t.outcome()


@check("kostant.square_zero", "kostant", "kostant-codifferential")
def _c_kostant_sq(ctx: Context) -> Outcome:
    pp = pplus(ctx.n)
    t = Tally()
    for k in range(pp.dim + 1):
        for m in pp.all_monomials(k):
            t.truth(not kostantCodiff(pp, kostantCodiff(pp, {m: ONE})), monomial=m)
    return t.outcome()


@check("kostant.values_in_g2", "kostant", "kostant-codifferential")
def _c_kostant_g2(ctx: Context) -> Outcome:
    """Vanishes on the ideal of nu_+ and takes values in it."""
    pp = pplus(ctx.n)
    nu = 1 << pp.nu_plus_bit
    t = Tally()
    for k in range(pp.dim + 1):
        for m in pp.all_monomials(k):
            img = kostantCodiff(pp, {m: ONE})
            if m & nu:
                t.truth(not img, monomial=m)
            else:
                t.truth(all(x & nu for x in img), monomial=m)
    return t.outcome()


@check("kostant.adjointness", "kostant", "kostant-adjointness")
def _c_kostant_adj(ctx: Context) -> Outcome:
    pp = pplus(ctx.n)
    t = Tally()
    for k in range(1, 2 * ctx.n + 1):
        t.truth(adjointPairingCheck(pp, k), k=k)
    return t.outcome()


@check("homology.ranks", "homology", "homology-bundles", "printed")
def _c_homology(ctx: Context) -> Outcome:
    n = ctx.n
    t = Tally()
    for row in homologyRanks(pplus(n)):
        if row.k < 2:
            continue
        if row.k <= n + 1:
            t.truth(row.surjective, k=row.k, rank=row.rank, target=row.target_dim, claim="surjective")
        if row.k >= n + 1:
            t.truth(row.injective, k=row.k, rank=row.rank, source=row.source_dim, claim="injective")
    return t.outcome()


# --------------------------------------------------------------------------
# vertical codifferential


def _transport(pp, lay, n, a: Multiform) -> dict:
    """Map pure P-forms to Lambda p_+ via the Killing-form duality."""
    leg = {lay.i: (pp.nu_plus_bit, -I_UNIT)}
    for s in range(1, n + 1):
        leg[lay.g10(s)] = (n + s - 1, ONE)
        leg[lay.g01(s)] = (s - 1, -ONE)
    out: dict = {}
    for mask, c in a.terms.items():
        acc = {0: c}
        for g in lay.legs(mask):
            bit, f = leg[g]
            acc = wedge_pp(acc, {1 << bit: f})
        for k, v in acc.items():
            out[k] = out.get(k, ZERO) + v
    return {k: v for k, v in out.items() if v}


@check("codiffP.kostant_transport", "codiff-p", "vertical-codifferential")
def _c_transport(ctx: Context) -> Outcome:
    """On pure P-forms the formula is a fixed multiple of the transported Kostant codifferential."""
    n, model = ctx.n, ctx.model
    lay = model.layout
    pp = pplus(n)
    pgens = [lay.i] + [lay.g10(s) for s in range(1, n + 1)] + [lay.g01(s) for s in range(1, n + 1)]
    t = Tally()
    const = None
    nonzero = 0
    for r in range(len(pgens) + 1):
        for legs in combinations(pgens, r):
            mask = sum(1 << g for g in legs)
            a = Multiform(n, {mask: ONE})
            lhs = _transport(pp, lay, n, pCodifferential(model, a))
            rhs = kostantCodiff(pp, _transport(pp, lay, n, a))
            if not lhs and not rhs:
                t.checked += 1
                continue
            if const is None and rhs:
                k0 = next(iter(rhs))
                const = lhs.get(k0, ZERO) / rhs[k0]
            nonzero += 1
            ok = const is not None and all(lhs.get(x, ZERO) == const * rhs.get(x, ZERO) for x in set(lhs) | set(rhs))
            t.truth(ok and bool(const), legs=[lay.names[g] for g in legs])
    t.truth(nonzero > 0, note="some nonzero image")
    return t.outcome()


@check("codiffP.ideal_of_I", "codiff-p", "vertical-codifferential")
def _c_ideal(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    t = Tally()
    for p, q, k, j in omega_indices(n):
        w = omegaJ(n, p, q, k, j)
        t.zero(pCodifferential(model, wedge(b.I, w)), p=p, q=q, k=k, j=j)
    for name, f in b.as_dict().items():
        t.zero(pCodifferential(model, wedge(b.I, f)), form=name)
    return t.outcome()


@check("codiffP.k_legs_sign", "codiff-p", "vertical-codifferential")
def _c_klegs(ctx: Context) -> Outcome:
    """d*_P(a ^ b) = (-1)^deg(a) a ^ d*_P b for a a K-form and b a P-form."""
    n, model = ctx.n, ctx.model
    lay = model.layout
    rng = ctx.rng("codiffP.k_legs_sign")
    t = Tally()
    for trial in range(100):
        km = rng.randint(0, lay.k_mask)
        pm = rng.randint(0, lay.p_mask >> lay.i) << lay.i
        A = Multiform(n, {km: ONE})
        B = Multiform(n, {pm: ONE})
        sign = -1 if bin(km).count("1") & 1 else 1
        t.forms(pCodifferential(model, wedge(A, B)), wedge(A, pCodifferential(model, B)).scale(sign), trial=trial)
    return t.outcome()


@check("codiffP.omega02_value", "codiff-p", "vertical-codifferential")
def _c_omega02(ctx: Context) -> Outcome:
    n = ctx.n
    b = basic_forms(n)
    t = Tally()
    t.forms(pCodifferential(ctx.model, b.w02), b.I.scale(Scalar(0, Fraction(n, 2))))
    return t.outcome()


def omega_codiff_constant(n: int) -> Scalar:
    """Global constant c with d*_P omega_j = c times the two-term right-hand side, fixed at omega02."""
    b = basic_forms(n)
    val = _ratio(pCodifferential(buildModel(n), b.w02), b.I)
    return val / Scalar(-n)


@check("codiffP.omega_family", "codiff-p", "vertical-codifferential-omega", "printed")
def _c_omega_codiff(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    W = _W(n)
    c = omega_codiff_constant(n)
    t = Tally()
    for p, q, k, j in omega_indices(n):
        if k == 0:
            continue
        rhs = wedge(b.I, W(p, q, k - 1, j)).scale((k - (p + q) + j) * (k - j - (n + 1)))
        rhs = rhs + wedge(b.I, W(p, q, k - 1, j + 1)).scale((p - j) * (q - j))
        t.forms(pCodifferential(model, W(p, q, k, j)), rhs.scale(c), p=p, q=q, k=k, j=j)
    return t.outcome(constant=str(c))


# --------------------------------------------------------------------------
# kappa and the omega family


@check("kappa.recursion", "kappa", "kappa-recursion")
def _c_kappa_rec(ctx: Context) -> Outcome:
    n = max(ctx.n, 4)
    t = Tally()
    for p in range(n + 2):
        for q in range(n + 2):
            for k in range(0, 2 * n + 3):
                for j in range(-2, n + 3):
                    lhs = kappa(p, q, k, j) * (p - j) * (q - j)
                    rhs = kappa(p, q, k, j + 1) * (j + 1) * (k - (p + q) + j + 1)
                    t.scalars(lhs, rhs, p=p, q=q, k=k, j=j)
    return t.outcome()


@check("kappa.recursion_unique", "kappa", "kappa-recursion")
def _c_kappa_unique(ctx: Context) -> Outcome:
    """The recursion has a one-dimensional solution space on the admissible window."""
    n = ctx.n
    t = Tally()
    for p, q, k in pqk_indices(n):
        lo, hi = max(0, p + q - k), min(p, q)
        js = list(range(lo - 1, hi + 2))
        rows = []
        for a, j in enumerate(js[:-1]):
            rows.append({a: Scalar((p - j) * (q - j)), a + 1: Scalar(-(j + 1) * (k - (p + q) + j + 1))})
        rows.append({0: ONE})
        rows.append({len(js) - 1: ONE})
        sol = nullspace(rows, len(js))
        ok = len(sol) == 1
        if ok:
            v = sol[0]
            ref = [Scalar(kappa(p, q, k, j)) for j in js]
            piv = next(a for a, x in enumerate(ref) if x)
            r = v.get(piv, ZERO) / ref[piv]
            ok = all(v.get(a, ZERO) == r * ref[a] for a in range(len(js)))
        t.truth(ok, p=p, q=q, k=k)
    return t.outcome()


@check("kappa.relation_omega", "kappa", "omega-relation")
def _c_relation(ctx: Context) -> Outcome:
    n = ctx.n
    W = _W(n)
    t = Tally()
    for p, q, k in pqk_indices(n):
        if k <= n:
            continue
        acc = Multiform.zero(n)
        for j in range(max(0, p + q - k), min(p, q) + 1):
            acc = acc + W(p, q, k, j).scale(kappa(p, q, k, j))
        t.zero(acc, p=p, q=q, k=k)
    return t.outcome()


@check("omega.types", "kappa", "omega-family", "printed")
def _c_omega_types(ctx: Context) -> Outcome:
    n = ctx.n
    lay = ctx.model.layout
    t = Tally()
    for p, q, k, j in omega_indices(n):
        w = omegaJ(n, p, q, k, j)
        want = ((p + q, 2 * k - p - q), (p, q), (k - p, k - q))
        strata = {(s.bidegree, s.k_type, s.p_type) for s in w.strata()}
        t.truth(strata <= {want}, p=p, q=q, k=k, j=j)
        for g in (lay.i, lay.z, lay.zbar):
            t.zero(insert(g, w), p=p, q=q, k=k, j=j, inserted=lay.names[g])
    return t.outcome()


# --------------------------------------------------------------------------
# kernels for p + q <= n


@check("low.dstarP", "low", "low-kernel-conditions")
def _c_low_dstar(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in low_pairs(n):
        t.zero(pCodifferential(model, kernelLow(n, p, q)), p=p, q=q)
    return t.outcome()


@check("low.dstarP_dP", "low", "low-kernel-conditions")
def _c_low_dstar_dp(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in low_pairs(n):
        t.zero(pCodifferential(model, dP(model, kernelLow(n, p, q))), p=p, q=q)
    return t.outcome()


@check("low.shape", "low", "low-kernel-conditions")
def _c_low_shape(ctx: Context) -> Outcome:
    n = ctx.n
    lay = ctx.model.layout
    b = basic_forms(n)
    t = Tally()
    for p, q in low_pairs(n):
        f = kernelLow(n, p, q)
        strata = {(s.bidegree, s.k_type) for s in f.strata()}
        t.truth(not f.is_zero() and strata == {((p + q, 2 * n + 1 - p - q), (p, q))}, p=p, q=q)
        t.zero(wedge(b.I, f), p=p, q=q)
        t.truth(not insert(lay.i, f).is_zero(), p=p, q=q, claim="i_I phi != 0")
    return t.outcome()


@check("low.pi_reduction", "low", "low-kernel-conditions")
def _c_pi_red(ctx: Context) -> Outcome:
    """I* ^ pi_j^{p,q;k} = 2^k I* ^ omega_j^{p,q;k}."""
    n = ctx.n
    b = basic_forms(n)
    t = Tally()
    for p, q, k, j in omega_indices(n):
        if k < p + q:
            continue
        t.forms(
            wedge(b.I, piJ(n, p, q, k, j)),
            wedge(b.I, omegaJ(n, p, q, k, j)).scale(2**k),
            p=p, q=q, k=k, j=j,
        )
    return t.outcome()


@check("low.dP_pi", "low", "low-kernel-conditions")
def _c_dp_pi(ctx: Context) -> Outcome:
    """d_P(I* ^ pi_j^{p,q;k}) = pi_j^{p,q;k+1}."""
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    t = Tally()
    for p in range(n + 1):
        for q in range(n + 1):
            for k in range(p + q, 2 * n + 1):
                for j in range(0, min(p, q) + 1):
                    t.forms(dP(model, wedge(b.I, piJ(n, p, q, k, j))), piJ(n, p, q, k + 1, j), p=p, q=q, k=k, j=j)
    return t.outcome()


@check("below.coclosed", "low", "low-kernel-properties")
def _c_below_coclosed(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in low_pairs(n):
        f = kernelLow(n, p, q)
        t.zero(delStarK(model, f), p=p, q=q, op="del*_K")
        t.zero(delBarStarK(model, f), p=p, q=q, op="delbar*_K")
        t.zero(deltaK(model, f), p=p, q=q, op="delta_K")
    return t.outcome()


@check("below.primitive", "low", "low-kernel-properties")
def _c_below_prim(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in low_pairs(n):
        t.zero(lefschetzKAdjoint(model, kernelLow(n, p, q)), p=p, q=q)
    return t.outcome()


@check("below.conjugation", "low", "low-kernel-properties")
def _c_below_conj(ctx: Context) -> Outcome:
    n = ctx.n
    t = Tally()
    for p, q in low_pairs(n):
        t.forms(conjugate(kernelLow(n, p, q)), kernelLow(n, q, p), p=p, q=q)
    return t.outcome()


# --------------------------------------------------------------------------
# kernels for p + q > n


def _params_label(a, b):
    return f"({a},{b})"


@check("high.dstarP", "high", "high-kernel-conditions")
def _c_high_dstar(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in high_pairs(n):
        for a, b in HIGH_PARAMS:
            t.zero(pCodifferential(model, kernelHigh(n, p, q, a, b)), p=p, q=q, params=_params_label(a, b))
    return t.outcome()


@check("high.dstarP_dP", "high", "high-kernel-conditions")
def _c_high_dstar_dp(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in high_pairs(n):
        for a, b in HIGH_PARAMS:
            t.zero(pCodifferential(model, dP(model, kernelHigh(n, p, q, a, b))), p=p, q=q, params=_params_label(a, b))
    return t.outcome()


@check("high.shape", "high", "high-kernel-conditions")
def _c_high_shape(ctx: Context) -> Outcome:
    n = ctx.n
    b = basic_forms(n)
    t = Tally()
    for p, q in high_pairs(n):
        for a, be in HIGH_PARAMS:
            f = kernelHigh(n, p, q, a, be)
            strata = {(s.bidegree, s.k_type) for s in f.strata()}
            t.truth(strata <= {((p + q, 2 * n + 1 - p - q), (p, q))}, p=p, q=q)
        if p <= n and q <= n:
            f = kernelHigh(n, p, q, ONE, ONE)
            t.truth(not wedge(b.I, f).is_zero(), p=p, q=q, claim="I* ^ phi != 0")
    return t.outcome()


@check("high.tilde_pi_closed", "high", "high-kernel-conditions")
def _c_tpi_closed(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for k in range(0, 2 * n + 2):
        for p in range(n + 2):
            for q in range(n + 2):
                for j in range(max(0, p + q - k), min(p, q) + 1):
                    t.zero(dP(model, tildePiJ(n, p, q, k, j)), p=p, q=q, k=k, j=j)
    return t.outcome()


@check("high.tilde_pi_reduction", "high", "high-kernel-conditions")
def _c_tech1(ctx: Context) -> Outcome:
    """I* ^ tpi_j^{p,q;n+1} = 2^{n+1} I* ^ (omega_j^{p,q;n+1} + i j Z* ^ Zbar* ^ omega_{j-1}^{p-1,q-1;n})."""
    n = ctx.n
    b = basic_forms(n)
    W = _W(n)
    ZZb = wedge(b.Z, b.Zbar)
    t = Tally()
    for p in range(n + 1):
        for q in range(n + 1):
            for j in range(max(0, p + q - n - 1), min(p, q) + 1):
                rhs = W(p, q, n + 1, j) + wedge(ZZb, W(p - 1, q - 1, n, j - 1)).scale(I_UNIT * j)
                t.forms(wedge(b.I, tildePiJ(n, p, q, n + 1, j)), wedge(b.I, rhs).scale(2 ** (n + 1)), p=p, q=q, j=j)
    return t.outcome()


@check("above.coprimitive", "high", "high-kernel-properties")
def _c_coprim(ctx: Context) -> Outcome:
    n = ctx.n
    wM = omegaM(n)
    t = Tally()
    for p, q in high_pairs(n):
        for a, b in HIGH_PARAMS:
            t.zero(wedge(wM, kernelHigh(n, p, q, a, b)), p=p, q=q, params=_params_label(a, b))
    return t.outcome()


@check("above.omegaM_tilde_pi", "high", "high-kernel-properties")
def _c_wm_tpi(ctx: Context) -> Outcome:
    """omega_M ^ tpi_j^{p,q;k} = tpi_{j+1}^{p+1,q+1;k+1} / 4."""
    n = ctx.n
    wM = omegaM(n)
    quarter = Scalar(Fraction(1, 4))
    t = Tally()
    for k in range(0, 2 * n + 1):
        for p in range(n + 1):
            for q in range(n + 1):
                for j in range(max(0, p + q - k), min(p, q) + 1):
                    rhs = tildePiJ(n, p + 1, q + 1, k + 1, j + 1, strict=False).scale(quarter)
                    t.forms(wedge(wM, tildePiJ(n, p, q, k, j)), rhs, p=p, q=q, k=k, j=j)
    return t.outcome()


@check("above.delK_tilde_pi", "high", "high-kernel-properties")
def _c_delk_tpi(ctx: Context) -> Outcome:
    """del_K tpi_j^{p,q;k} = (k-(p+q)+j)(Z* ^ tpi_j^{p,q;k} - I* ^ tpi_j^{p+1,q;k})."""
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    t = Tally()
    for k in range(0, 2 * n + 2):
        for p in range(n + 2):
            for q in range(n + 2):
                for j in range(max(0, p + q - k), min(p, q) + 1):
                    tp = tildePiJ(n, p, q, k, j)
                    rhs = wedge(b.Z, tp) - wedge(b.I, tildePiJ(n, p + 1, q, k, j, strict=False))
                    t.forms(delK(model, tp), rhs.scale(k - (p + q) + j), p=p, q=q, k=k, j=j)
    return t.outcome()


@check("above.dstarK_beta_independent", "high", "high-kernel-properties")
def _c_beta_indep(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in high_pairs(n):
        base = delStarK(model, kernelHigh(n, p, q, ONE, ZERO))
        for b in (ONE, Scalar(-2, 5)):
            t.forms(delStarK(model, kernelHigh(n, p, q, ONE, b)), base, p=p, q=q, beta=b)
    return t.outcome()


@check("above.dbarstarK_alpha_independent", "high", "high-kernel-properties")
def _c_alpha_indep(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in high_pairs(n):
        base = delBarStarK(model, kernelHigh(n, p, q, ZERO, ONE))
        for a in (ONE, Scalar(-2, 5)):
            t.forms(delBarStarK(model, kernelHigh(n, p, q, a, ONE)), base, p=p, q=q, alpha=a)
    return t.outcome()


@check("above.dstarK_vanishing", "high", "high-kernel-properties")
def _c_dstar_vanish(ctx: Context) -> Outcome:
    """del*_K phi^{a,b} vanishes exactly when a = 0 (interior range p, q <= n)."""
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in high_pairs(n):
        if p > n or q > n:
            continue
        t.zero(delStarK(model, kernelHigh(n, p, q, ZERO, ONE)), p=p, q=q)
        t.truth(not delStarK(model, kernelHigh(n, p, q, ONE, ZERO)).is_zero(), p=p, q=q, claim="nonzero for a=1")
    return t.outcome()


@check("above.delK_alpha_independent", "high", "high-kernel-properties")
def _c_delk_alpha(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for p, q in high_pairs(n):
        f = kernelHigh(n, p, q, Scalar(2), Scalar(0, 3))
        t.forms(delK(model, f), delK(model, kernelHigh(n, p, q, ZERO, Scalar(0, 3))), p=p, q=q, op="del_K")
        t.forms(delKbar(model, f), delKbar(model, kernelHigh(n, p, q, Scalar(2), ZERO)), p=p, q=q, op="delbar_K")
    return t.outcome()


@check("above.conjugation", "high", "high-kernel-properties")
def _c_high_conj(ctx: Context) -> Outcome:
    n = ctx.n
    t = Tally()
    a, b = Scalar(2), Scalar(0, 3)
    for p, q in high_pairs(n):
        t.forms(conjugate(kernelHigh(n, p, q, a, b)), kernelHigh(n, q, p, b.conjugate(), a.conjugate()), p=p, q=q)
    return t.outcome()


@check("above.derivative_relation", "high", "high-kernel-derivative-relation")
def _c_der_rel(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    i = I_UNIT
    beta = Scalar(1, 2)
    t = Tally()
    for p, q in high_pairs(n):
        if p < 1 or (p - 1) + q <= n:
            continue
        lhs = delK(model, kernelHigh(n, p - 1, q, ZERO, beta)).scale(-2 * i * (n + 1 - p))
        rhs = dP(model, kernelHigh(n, p, q, ZERO, beta)).scale(p + q - n)
        t.forms(lhs, rhs, p=p, q=q)
    return t.outcome()


@check("above.derivative_relation_conjugate", "high", "high-kernel-derivative-relation")
def _c_der_rel_bar(ctx: Context) -> Outcome:
    """2i(n+1-q) delbar_K phi_{p,q-1}^{a,0} = (p+q-n) d_P phi_{p,q}^{a,0}."""
    n, model = ctx.n, ctx.model
    i = I_UNIT
    alpha = Scalar(1, 2)
    t = Tally()
    for p, q in high_pairs(n):
        if q < 1 or p + (q - 1) <= n:
            continue
        lhs = delKbar(model, kernelHigh(n, p, q - 1, alpha, ZERO)).scale(2 * i * (n + 1 - q))
        rhs = dP(model, kernelHigh(n, p, q, alpha, ZERO)).scale(p + q - n)
        t.forms(lhs, rhs, p=p, q=q)
    return t.outcome()


@check("above.codifferential_relation", "high", "high-kernel-codifferential-relation")
def _c_cod_rel(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    alpha = Scalar(3, -1)
    t = Tally()
    for p in range(n + 1):
        for q in range(n + 1):
            if p + q < n:
                continue
            lhs = delStarK(model, kernelHigh(n, p + 1, q, alpha, ZERO))
            rhs = delBarStarK(model, kernelHigh(n, p, q + 1, ZERO, alpha))
            t.forms(lhs, rhs, p=p, q=q)
    return t.outcome()


def _dj(n, p, q, j, beta, corrected):
    _, b1, g1, _ = high_coefficients(n, p, q, j + 1, ONE, beta)
    _, b0, g0, _ = high_coefficients(n, p, q, j, ONE, beta)
    if corrected:
        return (j + 1) * (n - (p + q) + j + 2) * (b1 + g1) - (p - j) * (q - j) * (b0 + g0)
    return (j + 1) * (n - (p + q) * j + 2) * (b1 + g1) + (p - j) * (q - j) * (b0 + g0)


def _dj_check(ctx: Context, corrected: bool) -> Outcome:
    n = ctx.n
    t = Tally()
    for p, q in high_pairs(n):
        for j in range(-2, n + 3):
            t.scalars(_dj(n, p, q, j, ONE, corrected), _dj(n, p, q, j, ZERO, corrected), p=p, q=q, j=j)
    return t.outcome()


@check("above.dj_beta_independent", "high", "high-kernel-properties", "printed")
def _c_dj_printed(ctx: Context) -> Outcome:
    """The coefficient d_j as printed is independent of beta."""
    return _dj_check(ctx, corrected=False)


@check("above.dj_beta_independent_corrected", "high", "high-kernel-properties")
def _c_dj_fixed(ctx: Context) -> Outcome:
    """d_j with factor (n-(p+q)+j+2) and a minus sign is independent of beta."""
    return _dj_check(ctx, corrected=True)


# --------------------------------------------------------------------------
# real kernels


@check("real.reality", "real", "real-kernel-image")
def _c_real(ctx: Context) -> Outcome:
    n = ctx.n
    t = Tally()
    for k in range(0, 2 * n + 2):
        f = kernelReal(n, k)
        t.forms(conjugate(f), f, k=k)
    return t.outcome()


@check("real.coclosed", "real", "real-kernel-image")
def _c_real_cocl(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for k in range(0, 2 * n + 2):
        t.zero(deltaK(model, kernelReal(n, k)), k=k)
    return t.outcome()


@check("real.primitive_coprimitive", "real", "real-kernel-image")
def _c_real_prim(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    wM = omegaM(n)
    t = Tally()
    for k in range(0, 2 * n + 2):
        f = kernelReal(n, k)
        if k <= n:
            t.zero(lefschetzKAdjoint(model, f), k=k, claim="primitive")
        else:
            t.zero(wedge(wM, f), k=k, claim="coprimitive")
    return t.outcome()


@check("real.rumin_conditions", "real", "real-kernel-image")
def _c_real_rumin(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for k in range(0, 2 * n + 2):
        f = kernelReal(n, k)
        t.zero(pCodifferential(model, f), k=k, op="d*_P")
        t.zero(pCodifferential(model, dP(model, f)), k=k, op="d*_P d_P")
    return t.outcome()


@check("real.gamma_vanishes", "real", "real-kernel-image", "printed")
def _c_gamma(ctx: Context) -> Outcome:
    """gamma_{p,q} = alpha_{p,q} + beta_{p-1,q+1} = 0 for p+q = k > n."""
    n = ctx.n
    t = Tally()
    for k in range(n + 1, 2 * n + 2):
        for p in range(1, n + 2):
            q = k - p
            if not (0 <= q <= n):
                continue
            a, _ = real_params(n, p, q)
            _, b = real_params(n, p - 1, q + 1)
            t.scalars(a + b, ZERO, p=p, q=q)
    return t.outcome()


@check("real.lambda_relations", "real", "real-kernel-ladder")
def _c_lambda(ctx: Context) -> Outcome:
    n = ctx.n
    i = I_UNIT
    t = Tally()
    for p, q in low_pairs(n):
        if p + q + 1 > n:
            continue
        t.scalars(lambda_pq(n, p, q), 2 * i * lambda_pq(n, p + 1, q) * (n + 1 - p), p=p, q=q, rel="p")
        t.scalars(lambda_pq(n, p, q), -2 * i * lambda_pq(n, p, q + 1) * (n + 1 - q), p=p, q=q, rel="q")
    return t.outcome()


@check("real.parameter_recursions", "real", "real-kernel-ladder", "printed")
def _c_param_rec(ctx: Context) -> Outcome:
    """alpha_{p,q-1} = -2i(n+1-q) alpha_{p,q} and beta_{p-1,q} = 2i(n+1-p) beta_{p,q}, all p+q-1 > n."""
    n = ctx.n
    i = I_UNIT
    t = Tally()
    for p, q in high_pairs(n):
        if q >= 1 and p + q - 1 > n:
            t.scalars(real_params(n, p, q - 1)[0], -2 * i * (n + 1 - q) * real_params(n, p, q)[0], p=p, q=q, rel="alpha")
        if p >= 1 and p + q - 1 > n:
            t.scalars(real_params(n, p - 1, q)[1], 2 * i * (n + 1 - p) * real_params(n, p, q)[1], p=p, q=q, rel="beta")
    return t.outcome()


@check("real.low_K_derivative", "real", "real-kernel-ladder")
def _c_low_kder(ctx: Context) -> Outcome:
    """d_K phi_{p,q} = (n+1-(p+q)) (Z* + Zbar*) ^ phi_{p,q}."""
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    t = Tally()
    for p, q in low_pairs(n):
        f = kernelLow(n, p, q)
        t.forms(dK(model, f), wedge(b.Z + b.Zbar, f).scale(n + 1 - (p + q)), p=p, q=q)
    return t.outcome()


@check("real.low_P_derivative", "real", "real-kernel-ladder")
def _c_low_pder(ctx: Context) -> Outcome:
    """d_P phi_{p,q} = 2i((n+2-p) Z* ^ phi_{p-1,q} - (n+2-q) Zbar* ^ phi_{p,q-1})."""
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    t = Tally()
    for p, q in low_pairs(n):
        rhs = Multiform.zero(n)
        if p >= 1:
            rhs = rhs + wedge(b.Z, kernelLow(n, p - 1, q)).scale(n + 2 - p)
        if q >= 1:
            rhs = rhs - wedge(b.Zbar, kernelLow(n, p, q - 1)).scale(n + 2 - q)
        t.forms(dP(model, kernelLow(n, p, q)), rhs.scale(2 * I_UNIT), p=p, q=q)
    return t.outcome()


@check("real.middle_P_derivative", "real", "real-kernel-ladder")
def _c_middle(ctx: Context) -> Outcome:
    """For p+q = n+1: d_P phi_{p,q} = 2i sum_j zeta_j Z* ^ I* ^ pi_j^{p-1,q;n} - eta_j Zbar* ^ I* ^ pi_j^{p,q-1;n}."""
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    ZI, ZbI = wedge(b.Z, b.I), wedge(b.Zbar, b.I)
    t = Tally()
    for a, be in HIGH_PARAMS:
        for p in range(1, n + 1):
            q = n + 1 - p
            c = a * p + be * q
            rhs = Multiform.zero(n)
            for j in range(0, min(p, q) + 1):
                zeta = c * (q + 1) * kappa(p, q + 1, n + 1, j + 1)
                eta = c * (p + 1) * kappa(p + 1, q, n + 1, j + 1)
                if zeta and j <= min(p - 1, q):
                    rhs = rhs + wedge(ZI, piJ(n, p - 1, q, n, j)).scale(zeta)
                if eta and j <= min(p, q - 1):
                    rhs = rhs - wedge(ZbI, piJ(n, p, q - 1, n, j)).scale(eta)
            t.forms(dP(model, kernelHigh(n, p, q, a, be)), rhs.scale(2 * I_UNIT), p=p, q=q, params=_params_label(a, be))
    return t.outcome()


def _ladder(ctx: Context, ks) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    failing = []
    for k in ks:
        lhs = dK(model, kernelReal(n, k))
        rhs = dP(model, kernelReal(n, k + 1)).scale(c_k(n, k))
        if not t.forms(lhs, rhs, k=k, c_k=c_k(n, k)):
            failing.append(k)
    return t.outcome(failing_k=failing) if failing else t.outcome()


@check("real.ladder", "real", "real-kernel-ladder", "printed")
def _c_ladder(ctx: Context) -> Outcome:
    """d_K phi_k = c_k d_P phi_{k+1} for 0 <= k <= 2n."""
    return _ladder(ctx, range(0, 2 * ctx.n + 1))


@check("real.ladder_below_middle", "real", "real-kernel-ladder")
def _c_ladder_low(ctx: Context) -> Outcome:
    """The ladder for 0 <= k < n, where only the lower family enters."""
    return _ladder(ctx, range(0, ctx.n))


# --------------------------------------------------------------------------
# appendix formulas


@check("appendix.star_omega", "appendix", "star-omega-formula", "printed")
def _c_a1(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    b = basic_forms(n)
    lay = model.layout
    iZZ = wedge(b.Z, b.Zbar).scale(I_UNIT)
    W = _W(n)
    t = Tally()
    for p, q, k in pqk_indices(n):
        j0 = p + q - k
        if j0 < 0:
            continue
        eps = Scalar(Fraction(factorial(j0) * factorial(k - p) * factorial(k - q), factorial(n - (p + q) + k)))
        eps = eps * Scalar(2) ** (p + q - (n + 1))
        if ((p + q) * (p + q + 1) // 2 - (p + q - k)) % 2:
            eps = -eps
        star = hodgeStarK(model, W(p, q, k, j0))
        w = power(b.w20, n - (p + q) + k)
        for X in combinations(range(1, n + 1), k - p):
            for Y in combinations(range(1, n + 1), k - q):
                lhs = _seq_insert([lay.g10(s) for s in X] + [lay.g01(s) for s in Y], star)
                rhs = wedge(iZZ, _seq_insert([lay.f10(s) for s in X] + [lay.f01(s) for s in Y], w)).scale(eps)
                t.forms(lhs, rhs, p=p, q=q, k=k, X=list(X), Y=list(Y))
    return t.outcome()


def _appendix(check_id, anchor, kind="printed"):
    """Register a check looping over all admissible (p, q, k, j)."""

    def deco(fn):
        @check(check_id, "appendix", anchor, kind)
        def run(ctx: Context) -> Outcome:
            n, model = ctx.n, ctx.model
            env = _Env(n, model)
            t = Tally()
            for p, q, k, j in omega_indices(n):
                lhs, rhs = fn(env, p, q, k, j)
                t.forms(lhs, rhs, p=p, q=q, k=k, j=j)
            return t.outcome()

        run.__doc__ = fn.__doc__
        return fn

    return deco


class _Env:
    def __init__(self, n, model):
        self.n = n
        self.m = model
        self.b = basic_forms(n)
        self.W = _W(n)
        self.i = I_UNIT
        b = self.b
        self.ZZb = wedge(b.Z, b.Zbar)
        self.IZZb = wedge(b.I, self.ZZb)
        self.IZ = wedge(b.I, b.Z)
        self.IZb = wedge(b.I, b.Zbar)

    def star(self, a):
        return hodgeStarK(self.m, a)


@_appendix("appendix.wedge_star.omega11", "wedge-star-omega11")
def _a2i(e, p, q, k, j):
    sg = 1 if (p + q) % 2 == 0 else -1
    rhs = (e.star(e.W(p, q - 1, k, j - 1)).scale(j) + e.star(e.W(p, q - 1, k, j)).scale(q - j)).scale(sg * 2 * e.i)
    return wedge(e.b.w11, e.star(e.W(p, q, k, j))), rhs


@_appendix("appendix.wedge_star.omega11bar", "wedge-star-omega11bar")
def _a2ii(e, p, q, k, j):
    sg = 1 if (p + q) % 2 == 0 else -1
    rhs = (e.star(e.W(p - 1, q, k, j - 1)).scale(j) + e.star(e.W(p - 1, q, k, j)).scale(p - j)).scale(-sg * 2 * e.i)
    return wedge(e.b.w11bar, e.star(e.W(p, q, k, j))), rhs


@_appendix("appendix.wedge_star.omega20", "wedge-star-omega20")
def _a2iii(e, p, q, k, j):
    n = e.n
    rhs = e.star(e.W(p - 1, q - 1, k - 1, j - 1)).scale(4 * j * (n + 1 - (p + q) + j))
    rhs = rhs - e.star(e.W(p - 1, q - 1, k - 1, j)).scale(4 * (p - j) * (q - j))
    return wedge(e.b.w20, e.star(e.W(p, q, k, j))), rhs


def _a3a_rhs(e, p, q, k, j, factor):
    n, i, W = e.n, e.i, e.W
    rhs = wedge(e.b.Zbar, W(p, q, k, j)).scale(2 * (n - k))
    rhs = rhs + wedge(e.IZZb, W(p - 1, q, k - 1, j - 1)).scale(2 * i * j * (k - (p + q) + j))
    rhs = rhs - wedge(e.IZZb, W(p - 1, q, k - 1, j)).scale(2 * i * (p - j) * factor)
    return rhs


@_appendix("appendix.k_codiff.ZZbar", "k-codiff-ZZbar")
def _a3a(e, p, q, k, j):
    lhs = delStarK(e.m, wedge(e.ZZb, e.W(p, q, k, j)))
    return lhs, _a3a_rhs(e, p, q, k, j, e.n - k + p - j + 1)


@_appendix("appendix.k_codiff.ZZbar_corrected", "k-codiff-ZZbar", "identity")
def _a3a_fixed(e, p, q, k, j):
    """Same formula with last factor (n-k+q-j+1)."""
    lhs = delStarK(e.m, wedge(e.ZZb, e.W(p, q, k, j)))
    return lhs, _a3a_rhs(e, p, q, k, j, e.n - k + q - j + 1)


@_appendix("appendix.k_codiff.Z", "k-codiff-Z")
def _a3b(e, p, q, k, j):
    n, i, W = e.n, e.i, e.W
    w = W(p, q, k, j)
    rhs = w.scale(2 * (n + 1 - k))
    rhs = rhs + wedge(e.ZZb, W(p - 1, q - 1, k - 1, j - 1)).scale(2 * i * j * (n + 1 - (p + q) + j))
    rhs = rhs - wedge(e.ZZb, W(p - 1, q - 1, k - 1, j)).scale(2 * i * (p - j) * (q - j))
    rhs = rhs + wedge(e.IZ, W(p - 1, q, k - 1, j - 1)).scale(2 * i * j * (k - (p + q) + j))
    rhs = rhs - wedge(e.IZ, W(p - 1, q, k - 1, j)).scale(2 * i * (p - j) * (n - k + q - j + 1))
    return delStarK(e.m, wedge(e.b.Z, w)), rhs


@_appendix("appendix.k_codiff.Zbar", "k-codiff-Zbar")
def _a3c(e, p, q, k, j):
    n, i, W = e.n, e.i, e.W
    rhs = wedge(e.IZb, W(p - 1, q, k - 1, j - 1)).scale(2 * i * j * (k - (p + q) + j))
    rhs = rhs - wedge(e.IZb, W(p - 1, q, k - 1, j)).scale(2 * i * (p - j) * (n - k + q - j + 1))
    return delStarK(e.m, wedge(e.b.Zbar, W(p, q, k, j))), rhs


@_appendix("appendix.k_codiff.I", "k-codiff-I")
def _a3d(e, p, q, k, j):
    n, i, W = e.n, e.i, e.W
    rhs = wedge(e.IZb, W(p - 1, q - 1, k - 1, j - 1)).scale(2 * i * j * (n + 1 - (p + q) + j))
    rhs = rhs - wedge(e.IZb, W(p - 1, q - 1, k - 1, j)).scale(2 * i * (p - j) * (q - j))
    return delStarK(e.m, wedge(e.b.I, W(p, q, k, j))), rhs


@_appendix("appendix.k_codiff.IZZbar", "k-codiff-IZZbar")
def _a3e(e, p, q, k, j):
    w = e.W(p, q, k, j)
    return delStarK(e.m, wedge(e.IZZb, w)), wedge(e.IZb, w).scale(2 * (k - e.n + 1))


def _lw(e, p, q, k, j):
    n, W = e.n, e.W
    return W(p - 1, q - 1, k - 1, j - 1).scale(2 * j * (n + 1 - (p + q) + j)) - W(p - 1, q - 1, k - 1, j).scale(
        2 * (p - j) * (q - j)
    )


@_appendix("appendix.lefschetz_adjoint.omega", "lefschetz-adjoint-omega")
def _a4a(e, p, q, k, j):
    return lefschetzKAdjoint(e.m, e.W(p, q, k, j)), _lw(e, p, q, k, j)


@_appendix("appendix.lefschetz_adjoint.Z", "lefschetz-adjoint-Z")
def _a4b(e, p, q, k, j):
    w = e.W(p, q, k, j)
    return lefschetzKAdjoint(e.m, wedge(e.b.Z, w)), wedge(e.b.Z, lefschetzKAdjoint(e.m, w))


@_appendix("appendix.lefschetz_adjoint.Zbar", "lefschetz-adjoint-Zbar")
def _a4c(e, p, q, k, j):
    w = e.W(p, q, k, j)
    return lefschetzKAdjoint(e.m, wedge(e.b.Zbar, w)), wedge(e.b.Zbar, lefschetzKAdjoint(e.m, w))


@_appendix("appendix.lefschetz_adjoint.I", "lefschetz-adjoint-I")
def _a4d(e, p, q, k, j):
    w = e.W(p, q, k, j)
    return lefschetzKAdjoint(e.m, wedge(e.b.I, w)), wedge(e.b.I, lefschetzKAdjoint(e.m, w))


@_appendix("appendix.lefschetz_adjoint.IZZbar", "lefschetz-adjoint-IZZbar")
def _a4e(e, p, q, k, j):
    w = e.W(p, q, k, j)
    rhs = wedge(e.IZZb, lefschetzKAdjoint(e.m, w)) - wedge(e.b.I, w).scale(2 * e.i)
    return lefschetzKAdjoint(e.m, wedge(e.IZZb, w)), rhs


@check("appendix.colefschetz_split", "appendix", "lefschetz-adjoint-omega")
def _c_colef(ctx: Context) -> Outcome:
    """L* a = 2i i_Z i_Zbar a + (1/2) *^{-1}(omega20 ^ *a) on the omega family with one-form factors."""
    n, model = ctx.n, ctx.model
    lay = model.layout
    b = basic_forms(n)
    half = Scalar(Fraction(1, 2))
    t = Tally()
    for p, q, k, j in omega_indices(n):
        w = omegaJ(n, p, q, k, j)
        for name, f in (("omega", w), ("Z^omega", wedge(b.Z, w)), ("IZZbar^omega", wedge_all(n, [b.I, b.Z, b.Zbar, w]))):
            rhs = insert(lay.z, insert(lay.zbar, f)).scale(2 * I_UNIT)
            rhs = rhs + hodgeStarKInverse(model, wedge(b.w20, hodgeStarK(model, f))).scale(half)
            t.forms(lefschetzKAdjoint(model, f), rhs, p=p, q=q, k=k, j=j, form=name)
    return t.outcome()


# --------------------------------------------------------------------------
# invariance


@check("invariance.kernels", "invariance", "invariance")
def _c_inv(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    for name, f in basic_forms(n).as_dict().items():
        t.truth(is_invariant(model, f), form=name)
    for p, q in low_pairs(n):
        t.truth(is_invariant(model, kernelLow(n, p, q)), family="low", p=p, q=q)
    for p, q in high_pairs(n):
        for a, b in HIGH_PARAMS:
            t.truth(is_invariant(model, kernelHigh(n, p, q, a, b)), family="high", p=p, q=q, params=_params_label(a, b))
    for k in range(0, 2 * n + 2):
        t.truth(is_invariant(model, kernelReal(n, k)), family="real", k=k)
    for p, q, k, j in omega_indices(n):
        t.truth(is_invariant(model, omegaJ(n, p, q, k, j)), family="omega", p=p, q=q, k=k, j=j)
    return t.outcome()


@check("invariance.degree_one", "invariance", "invariance")
def _c_inv_deg1(ctx: Context) -> Outcome:
    n, model = ctx.n, ctx.model
    t = Tally()
    t.scalars(len(invariantSubspace(model, Stratum(bidegree=(0, 1)))), 1, bidegree="(0,1)")
    t.scalars(len(invariantSubspace(model, Stratum(bidegree=(1, 0)))), 2, bidegree="(1,0)")
    return t.outcome()


@check("invariance.single_F_dual", "invariance", PLUMBING)
def _c_noninv(ctx: Context) -> Outcome:
    """A single F-dual is not invariant, so the invariance test has teeth."""
    lay = ctx.model.layout
    t = Tally()
    t.truth(not is_invariant(ctx.model, Multiform.dual(ctx.n, lay.f10(1))))
    return t.outcome()


# --------------------------------------------------------------------------
# running and export


def _suite_checks(suite: str) -> list[Check]:
    reg = registry()
    if suite == "all":
        return list(reg.values())
    if suite not in SUITES:
        raise ConfigurationError(f"unknown suite {suite!r}; choose from: all, {', '.join(SUITES)}")
    return [c for c in reg.values() if c.suite == suite]


def run_check(chk: Check, ctx: Context) -> CheckResult:
    ref = chk.anchor
    if ctx.n < chk.min_n:
        return CheckResult(chk.id, ref, "skipped", 0.0)
    start = time.perf_counter()
    out = chk.runner(ctx)
    elapsed = (time.perf_counter() - start) * 1000.0
    if out.ok:
        status = "pass" if out.checked else "skipped"
        return CheckResult(chk.id, ref, status, elapsed)
    status = "fail" if chk.kind == "identity" else "discrepancy"
    return CheckResult(chk.id, ref, status, elapsed, out.witness)


def runSuite(model, suite: str = "all", seed: int = 0) -> Report:
    """Run all checks of a suite ("all" or a name from SUITES) at the model's rank."""
    n = model if isinstance(model, int) else model.n
    checks = _suite_checks(suite)
    mdl = buildModel(n)
    ctx = Context(n, mdl, seed)
    results = [run_check(c, ctx) for c in checks]
    results.sort(key=lambda r: r.id)
    return Report(n, suite, __version__, results)


run_suite = runSuite


def report_to_json(report: Report, timings: bool = False) -> str:
    return json.dumps(report.to_dict(timings), indent=2, sort_keys=True) + "\n"


def report_to_text(report: Report, timings: bool = False) -> str:
    rows = sorted(report.checks, key=lambda c: c.id)
    idw = max([len("check")] + [len(c.id) for c in rows])
    refw = max([len("anchor")] + [len(c.paper_ref) for c in rows])
    lines = [f"n={report.n} suite={report.suite} version={report.version}"]
    head = f"{'check':<{idw}}  {'anchor':<{refw}}  {'status':<11}"
    if timings:
        head += f"  {'ms':>9}"
    lines += [head, "-" * len(head)]
    for c in rows:
        line = f"{c.id:<{idw}}  {c.paper_ref:<{refw}}  {c.status:<11}"
        if timings:
            ms = "" if c.elapsed_ms is None else f"{c.elapsed_ms:.1f}"
            line += f"  {ms:>9}"
        lines.append(line.rstrip())
    s = report.summary
    lines.append("-" * len(head))
    lines.append(" ".join(f"{k}={s[k]}" for k in STATUSES))
    return "\n".join(lines) + "\n"


def exportReport(report: Report, format: str = "json", path: str | None = None, timings: bool = False) -> str:
    """Render the report; write it to ``path`` when given.  Returns the text."""
    if format == "json":
        text = report_to_json(report, timings)
    elif format == "text":
        text = report_to_text(report, timings)
    else:
        raise ConfigurationError(f"unknown report format {format!r}")
    if path is not None:
        try:
            with open(path, "w") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {path}: {exc}") from exc
    return text


def load_report(text: str) -> Report:
    data = json.loads(text)
    checks = [
        CheckResult(c["id"], c["paper_ref"], c["status"], c.get("elapsed_ms"), c.get("witness"))
        for c in data["checks"]
    ]
    rep = Report(data["n"], data["suite"], data["version"], checks)
    if rep.summary != data["summary"]:
        raise ValueError("report summary does not match its checks")
    return rep
