"""K-Hodge star, K-codifferentials and the K-Lefschetz pair.

The horizontal pairing on covectors is complex bilinear, pairs type (1,0) with
type (0,1), and is extended to exterior powers by determinants:

    <Z*, Zbar*> = 2,   <F_s^{1,0}*, F_s^{0,1}*> = 4.

With these values <vol_K, vol_K> = 1.  The star is characterized by
alpha ^ *beta = <alpha, beta> vol_K on K-legs; P-legs are carried along.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .calculus import basic_forms, dK, delK, delKbar
from .exterior import Multiform, layout, mask_sign, popcount, wedge
from .lie_model import LieModel, mat_add, mat_mul, mat_scale, trace
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "HorizontalPairing",
    "horizontalPairing",
    "gK",
    "pairingK",
    "hodgeStarK",
    "hodgeStarKInverse",
    "starSquareSigns",
    "deltaK",
    "delStarK",
    "delBarStarK",
    "laplaceK",
    "lefschetzK",
    "lefschetzKAdjoint",
    "lefschetzKAdjointLiteral",
]

COVECTOR_PAIRING = {"Z": Scalar(2), "F": Scalar(4)}


def _n(x) -> int:
    return x if isinstance(x, int) else x.n


def gK(model: LieModel, u, v) -> Scalar:
    """The metric read off from B on the p-part: g_K(u, v) = B(u_p, v_p).

    Arguments are generator ids or generator vectors; the p-part of a matrix A
    is (A - S A S)/2.
    """
    S = model.S

    def p_part(x):
        A = model.rep_of(x)
        return mat_scale(mat_add(A, mat_mul(mat_mul(S, A), S), -ONE), Scalar(Fraction(1, 2)))

    return trace(mat_mul(p_part(u), p_part(v)))


@dataclass(frozen=True)
class HorizontalPairing:
    """Pairing data on the K-horizontal covectors of rank n.

    ``partner[i]`` is the generator paired with the K-generator i and
    ``value[i]`` the pairing <e^i, e^partner(i)>.
    """

    n: int
    partner: dict
    value: dict

    def pair_monomials(self, a: int, b: int) -> Scalar:
        """<e^a, e^b> for K-leg masks a, b (determinant extension)."""
        lay = layout(self.n)
        la, lb = lay.legs(a), lay.legs(b)
        if len(la) != len(lb):
            return ZERO
        images = []
        c = ONE
        for x in la:
            y = self.partner[x]
            if not b >> y & 1:
                return ZERO
            images.append(lb.index(y))
            c = c * self.value[x]
        inv = sum(1 for i in range(len(images)) for j in range(i + 1, len(images)) if images[i] > images[j])
        return -c if inv & 1 else c


@lru_cache(maxsize=None)
def horizontalPairing(n: int) -> HorizontalPairing:
    lay = layout(n)
    partner = {lay.z: lay.zbar, lay.zbar: lay.z}
    value = {lay.z: COVECTOR_PAIRING["Z"], lay.zbar: COVECTOR_PAIRING["Z"]}
    for s in range(1, n + 1):
        a, b = lay.f10(s), lay.f01(s)
        partner[a], partner[b] = b, a
        value[a] = value[b] = COVECTOR_PAIRING["F"]
    return HorizontalPairing(n, partner, value)


def pairingK(a: Multiform, b: Multiform) -> Scalar:
    """Bilinear pairing of two K-horizontal forms."""
    hp = horizontalPairing(a.n)
    acc = ZERO
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            v = hp.pair_monomials(ma, mb)
            if v:
                acc = acc + ca * cb * v
    return acc


@lru_cache(maxsize=None)
def _star_table(n: int) -> dict:
    """K-leg mask -> (image mask, coefficient)."""
    lay = layout(n)
    hp = horizontalPairing(n)
    full = lay.k_mask
    vol = basic_forms(n).volK
    v0 = vol.terms[full]
    table = {}
    for S in range(full + 1):
        A = 0
        for x in lay.legs(S):
            A |= 1 << hp.partner[x]
        C = full ^ A
        c = hp.pair_monomials(A, S) * v0
        if mask_sign(A, C) < 0:
            c = -c
        table[S] = (C, c)
    return table


@lru_cache(maxsize=None)
def _inverse_table(n: int) -> dict:
    return {img: (src, c.inverse()) for src, (img, c) in _star_table(n).items()}


def _apply(table: dict, a: Multiform) -> Multiform:
    kmask = a.layout.k_mask
    out = {}
    for m, c in a.terms.items():
        img, s = table[m & kmask]
        key = img | (m & ~kmask)
        out[key] = out.get(key, ZERO) + c * s
    return Multiform(a.n, out)


def hodgeStarK(model, a: Multiform) -> Multiform:
    return _apply(_star_table(a.n), a)


def hodgeStarKInverse(model, a: Multiform) -> Multiform:
    return _apply(_inverse_table(a.n), a)


def starSquareSigns(model) -> dict[int, int]:
    """K-degree -> sign s with *(*a) = s a on forms of that K-degree."""
    n = _n(model)
    lay = layout(n)
    table = _star_table(n)
    out: dict[int, int] = {}
    for S, (img, c) in table.items():
        back, c2 = table[img]
        assert back == S
        v = c * c2
        if v not in (ONE, -ONE):
            raise ArithmeticError("star squared is not a sign")
        sgn = 1 if v == ONE else -1
        d = popcount(S)
        if out.setdefault(d, sgn) != sgn:
            out[d] = 0  # type-dependent within a degree
    return dict(sorted(out.items()))


def deltaK(model: LieModel, a: Multiform) -> Multiform:
    return -hodgeStarK(model, dK(model, hodgeStarK(model, a)))


def delStarK(model: LieModel, a: Multiform) -> Multiform:
    return -hodgeStarK(model, delKbar(model, hodgeStarK(model, a)))


def delBarStarK(model: LieModel, a: Multiform) -> Multiform:
    return -hodgeStarK(model, delK(model, hodgeStarK(model, a)))


def laplaceK(model: LieModel, a: Multiform) -> Multiform:
    return dK(model, deltaK(model, a)) + deltaK(model, dK(model, a))


def lefschetzK(model, a: Multiform) -> Multiform:
    return wedge(basic_forms(_n(model)).wK, a)


def lefschetzKAdjoint(model, a: Multiform) -> Multiform:
    """The adjoint *^{-1} L_K * with the true inverse of the star."""
    return hodgeStarKInverse(model, lefschetzK(model, hodgeStarK(model, a)))


def lefschetzKAdjointLiteral(model, a: Multiform) -> Multiform:
    """The sandwich -* L_K * taken literally."""
    return -hodgeStarK(model, lefschetzK(model, hodgeStarK(model, a)))
