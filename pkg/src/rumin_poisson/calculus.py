"""Invariant calculus: basic forms, the exterior derivative and its splittings,
the vertical codifferential and invariant-subspace enumeration."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .exterior import (
    Multiform,
    Stratum,
    insert,
    mask_sign,
    popcount,
    power,
    project,
    wedge,
)
from .lie_model import LieModel, buildModel, mActionOnForms
from .linalg import nullspace
from .scalars import I_UNIT, ONE, ZERO, Scalar

__all__ = [
    "InvarianceError",
    "BasicForms",
    "basic_forms",
    "d_raw",
    "dInvariant",
    "dK",
    "dP",
    "delK",
    "delKbar",
    "pCodifferential",
    "is_invariant",
    "invariantSubspace",
    "stratum_monomials",
]

DEBUG = os.environ.get("RUMIN_DEBUG", "") not in ("", "0")


class InvarianceError(ValueError):
    """The bracket recipe was applied to a form that is not m-invariant."""


def d_raw(model: LieModel, a: Multiform) -> Multiform:
    """Antiderivation extending d e^w = -sum c^w_{uv} e^u ^ e^v.

    On m-invariant forms this is the exterior derivative of the corresponding
    invariant form on G/M.
    """
    out: dict = {}
    dd = model.d_dual
    for mask, coef in a.terms.items():
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            base = mask ^ low
            sign = -1 if popcount(mask & (low - 1)) & 1 else 1
            for m2, c2 in dd[w].terms.items():
                if m2 & base:
                    continue
                s = sign * mask_sign(m2, base)
                key = m2 | base
                val = coef * c2
                out[key] = out.get(key, ZERO) + (val if s > 0 else -val)
    return Multiform(model.n, out)


def is_invariant(model: LieModel, a: Multiform) -> bool:
    return all(mActionOnForms(model, i, a).is_zero() for i in range(len(model.m_basis)))


def dInvariant(model: LieModel, a: Multiform, check: bool | None = None) -> Multiform:
    if check is None:
        check = DEBUG
    if check and not is_invariant(model, a):
        raise InvarianceError("exterior derivative recipe requires an m-invariant form")
    return d_raw(model, a)


def _shift(model: LieModel, a: Multiform, dk: int, dp: int, dkt=None) -> Multiform:
    """Sum over strata of a of the component of d raising the grading by the shift."""
    lay = model.layout
    out = Multiform.zero(model.n)
    for st, piece in a.strata().items():
        k, p = st.bidegree
        target = (k + dk, p + dp)
        dpiece = d_raw(model, piece)
        if dkt is None:
            out = out + project(dpiece, bidegree=target)
        else:
            pt, qt = st.k_type
            out = out + project(
                dpiece, bidegree=target, k_type=(pt + dkt[0], qt + dkt[1])
            )
    return out


def dK(model: LieModel, a: Multiform) -> Multiform:
    return _shift(model, a, 1, 0)


def dP(model: LieModel, a: Multiform) -> Multiform:
    return _shift(model, a, 0, 1)


def delK(model: LieModel, a: Multiform) -> Multiform:
    return _shift(model, a, 1, 0, (1, 0))


def delKbar(model: LieModel, a: Multiform) -> Multiform:
    return _shift(model, a, 1, 0, (0, 1))


@dataclass(frozen=True)
class BasicForms:
    """The basic invariant forms of degree one and two, plus omega_K and vol_K."""

    n: int
    I: Multiform
    Z: Multiform
    Zbar: Multiform
    w20: Multiform
    w11: Multiform
    w11bar: Multiform
    w02: Multiform
    wK: Multiform
    volK: Multiform

    def as_dict(self) -> dict[str, Multiform]:
        return {
            "I*": self.I,
            "Z*": self.Z,
            "Zbar*": self.Zbar,
            "omega20": self.w20,
            "omega11": self.w11,
            "omega11bar": self.w11bar,
            "omega02": self.w02,
            "omegaK": self.wK,
            "volK": self.volK,
        }


@lru_cache(maxsize=None)
def _basic(n: int) -> BasicForms:
    model = buildModel(n)
    lay = model.layout
    i = I_UNIT
    half = Scalar(Fraction(1, 2))
    I = Multiform.dual(n, lay.i)
    Z = Multiform.dual(n, lay.z)
    Zb = Multiform.dual(n, lay.zbar)
    w20 = delK(model, Zb).scale(-i) + wedge(Zb, Z).scale(i)
    w11 = dP(model, Z).scale(half) - wedge(Z, I).scale(i)
    w11b = dP(model, Zb).scale(half) + wedge(Zb, I).scale(i)
    w02 = dP(model, I).scale(half)
    iZZb = wedge(Z, Zb).scale(i)
    wK = (iZZb + w20).scale(half)
    fact = 1
    for t in range(2, n + 1):
        fact *= t
    volK = wedge(iZZb, power(w20, n)).scale(Scalar(Fraction(1, 2 ** (n + 1) * fact)))
    return BasicForms(n, I, Z, Zb, w20, w11, w11b, w02, wK, volK)


def basic_forms(model_or_n) -> BasicForms:
    n = model_or_n if isinstance(model_or_n, int) else model_or_n.n
    return _basic(n)


def pCodifferential(model: LieModel, a: Multiform) -> Multiform:
    """Vertical codifferential: I* ^ sum_s i(G_s^{0,1}) i(G_s^{1,0}) a, normalized with factor 1."""
    lay = model.layout
    acc = Multiform.zero(model.n)
    for s in range(1, model.n + 1):
        acc = acc + insert(lay.g01(s), insert(lay.g10(s), a))
    return wedge(Multiform.dual(model.n, lay.i), acc)


def stratum_monomials(n: int, stratum: Stratum) -> list[int]:
    """All monomial masks lying in the (possibly partial) stratum, sorted."""
    from .exterior import layout

    lay = layout(n)
    f10 = [lay.f10(s) for s in range(1, n + 1)]
    f01 = [lay.f01(s) for s in range(1, n + 1)]
    g10 = [lay.g10(s) for s in range(1, n + 1)]
    g01 = [lay.g01(s) for s in range(1, n + 1)]
    out = []

    def subsets(idx):
        for r in range(len(idx) + 1):
            for c in combinations(idx, r):
                m = 0
                for x in c:
                    m |= 1 << x
                yield m

    ks = [
        zh | za | a | b
        for zh in (0, 1 << lay.z)
        for za in (0, 1 << lay.zbar)
        for a in subsets(f10)
        for b in subsets(f01)
    ]
    ps = [ih | a | b for ih in (0, lay.i_mask) for a in subsets(g10) for b in subsets(g01)]
    for km in ks:
        for pm in ps:
            m = km | pm
            if stratum.contains(lay.stratum_of(m)):
                out.append(m)
    out.sort()
    return out


def invariantSubspace(model: LieModel, stratum: Stratum) -> list[Multiform]:
    """Basis of the m-invariant forms in a stratum (exact nullspace)."""
    monos = stratum_monomials(model.n, stratum)
    rows: dict[tuple[int, int], dict] = {}
    for col, m in enumerate(monos):
        mono = Multiform._trusted(model.n, {m: ONE})
        for e in range(len(model.m_basis)):
            img = mActionOnForms(model, e, mono)
            for om, c in img.terms.items():
                rows.setdefault((e, om), {})[col] = c
    basis = nullspace(list(rows.values()), len(monos))
    return [Multiform(model.n, {monos[k]: c for k, c in vec.items()}) for vec in basis]
