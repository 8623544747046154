"""Kostant codifferential on the chain spaces of p_+ = g_1 + g_2.

Elements of the exterior algebra of (p_+)_C are stored like Multiforms:
``{bitmask: Scalar}`` over the basis

    a_s = e_{s,n+1} (s = 1..n),  b_s = e_{0,s} (s = 1..n),  nu_+ = e_{0,n+1}

with a_s at bit s-1, b_s at bit n+s-1 and nu_+ at bit 2n.  Brackets and the
B-dual bases are computed from the matrices, so the two codifferential
formulas below are independent computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exterior import mask_sign, popcount
from .lie_model import commutator, mat, mat_mul, trace, unit
from .linalg import rank
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "PPlus",
    "pplus",
    "kostantCodiff",
    "techCodiff",
    "wedge_pp",
    "adjointPairingCheck",
    "homologyRanks",
    "HomologyRow",
]


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class PPlus:
    """Basis data for Lambda (p_+)_C at rank n."""

    def __init__(self, n: int):
        self.n = n
        self.dim = 2 * n + 1
        last = n + 1
        self.basis = [unit(s, last) for s in range(1, n + 1)] + [unit(0, s) for s in range(1, n + 1)]
        self.basis.append(unit(0, last))
        self.nu_plus_bit = 2 * n
        self.nu_minus = unit(last, 0)
        # bracket table: [basis_u, basis_v] expressed in the basis (values lie in g_2)
        self.bracket = {}
        for u in range(self.dim):
            for v in range(u + 1, self.dim):
                self.bracket[(u, v)] = self.coords(commutator(self.basis[u], self.basis[v]))
        # B-dual bases of g_1 (eta) and g_{-1} (xi): B(xi_s, eta_t) = delta
        g1 = list(range(2 * n))
        gm1 = [unit(last, s) for s in range(1, n + 1)] + [unit(s, 0) for s in range(1, n + 1)]
        self.eta = g1
        self.xi = []
        for t in g1:
            # the dual is the unique basis element of g_{-1} pairing to 1
            cands = [x for x in gm1 if trace(mat_mul(self.basis[t], x))]
            x = cands[0]
            c = trace(mat_mul(self.basis[t], x))
            self.xi.append({k: v / c for k, v in x.items()})
        self.B_nu = trace(mat_mul(self.basis[self.nu_plus_bit], self.nu_minus))

    def coords(self, A: dict) -> dict:
        out = {}
        for u, b in enumerate(self.basis):
            (key,) = b.keys()
            c = A.get(key)
            if c:
                out[u] = c / b[key]
        # A must lie in p_+
        residue = dict(A)
        for u, c in out.items():
            (key,) = self.basis[u].keys()
            residue.pop(key, None)
        if any(residue.values()):
            raise ValueError("element not in p_+")
        return out

    def pair(self, u: int, X: dict) -> Scalar:
        """The value B(basis_u, X) of basis_u viewed as a functional on g_-."""
        return trace(mat_mul(self.basis[u], X))

    def all_monomials(self, k: int) -> list[int]:
        out = []
        for c in combinations(range(self.dim), k):
            m = 0
            for x in c:
                m |= 1 << x
            out.append(m)
        return out


@lru_cache(maxsize=None)
def pplus(n: int) -> PPlus:
    return PPlus(n)


def wedge_pp(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            if ma & mb:
                continue
            c = ca * cb
            if mask_sign(ma, mb) < 0:
                c = -c
            out[ma | mb] = out.get(ma | mb, ZERO) + c
    return _clean(out)


def _legs(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def kostantCodiff(pp: PPlus, b: dict, sign_flip: bool = False) -> dict:
    """Lie algebra homology differential via the alternating bracket sum."""
    out: dict = {}
    for mask, coef in b.items():
        legs = _legs(mask)
        k = len(legs)
        for i in range(k):
            for j in range(i + 1, k):
                br = pp.bracket[(legs[i], legs[j])]
                if not br:
                    continue
                rest = mask ^ (1 << legs[i]) ^ (1 << legs[j])
                # positions are 1-based in the formula
                sgn = -1 if (i + j + 2) & 1 else 1
                if sign_flip:
                    sgn = -sgn
                for w, c in br.items():
                    bw = 1 << w
                    if rest & bw:
                        continue
                    s = sgn * mask_sign(bw, rest)
                    val = coef * c
                    out[rest | bw] = out.get(rest | bw, ZERO) + (val if s > 0 else -val)
    return _clean(out)


def _insert_functional(pp: PPlus, X: dict, b: dict) -> dict:
    """Insertion of X in g_-: Z_1 ^ ... ^ Z_k viewed as a multilinear map on g/p."""
    vals = {u: pp.pair(u, X) for u in range(pp.dim)}
    out: dict = {}
    for mask, coef in b.items():
        for pos, u in enumerate(_legs(mask)):
            v = vals[u]
            if not v:
                continue
            c = coef * v
            key = mask ^ (1 << u)
            out[key] = out.get(key, ZERO) + (c if pos % 2 == 0 else -c)
    return _clean(out)


def techCodiff(pp: PPlus, b: dict) -> dict:
    """The codifferential via 1/2 sum_s nu_+ ^ i_{[eta_s, nu_-]} i_{xi_s}."""
    acc: dict = {}
    half = Scalar(1) / 2
    nu = {1 << pp.nu_plus_bit: ONE / pp.B_nu}
    for eta, xi in zip(pp.eta, pp.xi):
        br = commutator(pp.basis[eta], pp.nu_minus)
        inner = _insert_functional(pp, br, _insert_functional(pp, xi, b))
        term = wedge_pp(nu, inner)
        for m, c in term.items():
            acc[m] = acc.get(m, ZERO) + c * half
    return _clean(acc)


def adjointPairingCheck(pp: PPlus, k: int, sign_flip: bool = False) -> bool:
    """(d* a) ^ b = (-1)^k a ^ d* b for all monomials a of degree k, b of degree 2n+2-k."""
    top = 2 * pp.n + 2 - k
    for ma in pp.all_monomials(k):
        a = {ma: ONE}
        da = kostantCodiff(pp, a, sign_flip)
        for mb in pp.all_monomials(top):
            b = {mb: ONE}
            lhs = wedge_pp(da, b)
            rhs = wedge_pp(a, kostantCodiff(pp, b, sign_flip))
            if k % 2:
                rhs = {m: -c for m, c in rhs.items()}
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class HomologyRow:
    k: int
    source_dim: int
    target_dim: int
    rank: int

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim


def homologyRanks(pp: PPlus) -> list[HomologyRow]:
    """Ranks of Lambda^k g_1 -> Lambda^{k-2} g_1 ^ nu_+ induced by the codifferential."""
    rows = []
    g1 = [u for u in range(pp.dim) if u != pp.nu_plus_bit]
    two_n = len(g1)
    for k in range(0, two_n + 1):
        src = [m for m in pp.all_monomials(k) if not m >> pp.nu_plus_bit & 1]
        tgt_dim = 0
        if k >= 2:
            tgt_dim = len([m for m in pp.all_monomials(k - 1) if m >> pp.nu_plus_bit & 1])
        # matrix columns: images of source monomials
        cols = {}
        for c, m in enumerate(src):
            for om, v in kostantCodiff(pp, {m: ONE}).items():
                cols.setdefault(om, {})[c] = v
        r = rank(list(cols.values()))
        rows.append(HomologyRow(k, len(src), tgt_dim, r))
    return rows
