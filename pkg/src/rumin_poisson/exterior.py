"""Sparse exterior algebra of alternating forms on the complexified quotient.

Generators of the quotient are indexed in the fixed order

    Z < Zbar < F1^{1,0} .. Fn^{1,0} < F1^{0,1} .. Fn^{0,1} < I < G1^{1,0} .. Gn^{1,0} < G1^{0,1} .. Gn^{0,1}

and a monomial is stored as a bitmask of dual generators.  With this order the
K-horizontal legs (Z, Zbar, F) form a prefix and the P-vertical legs (I, G) a
suffix, so bidegree projection is a mask split.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .scalars import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Factor",
    "HoloType",
    "Generator",
    "Layout",
    "layout",
    "ModelMismatchError",
    "Stratum",
    "Multiform",
    "wedge",
    "wedge_all",
    "insert",
    "project",
    "conjugate",
    "mask_sign",
    "popcount",
]


class ModelMismatchError(ValueError):
    """Raised when objects built for different ranks are combined."""


class Factor(Enum):
    K = "K-horizontal"
    P = "P-vertical"


class HoloType(Enum):
    HOL = "holomorphic"
    ANTI = "antiholomorphic"
    REAL = "real-line"


@dataclass(frozen=True)
class Generator:
    id: int
    name: str
    factor: Factor
    holo: HoloType
    span: int | None = None


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_sign(a: int, b: int) -> int:
    """Sign of reordering e^a ^ e^b (disjoint masks) into increasing order."""
    inversions = 0
    while b:
        low = b & -b
        inversions += popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if inversions & 1 else 1


class Layout:
    """Generator table and leg masks for a fixed rank n."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("rank n must be positive")
        self.n = n
        self.dim = 4 * n + 3
        gens = [
            Generator(0, "Z", Factor.K, HoloType.HOL),
            Generator(1, "Zbar", Factor.K, HoloType.ANTI),
        ]
        for s in range(1, n + 1):
            gens.append(Generator(self.f10(s), f"F{s}^10", Factor.K, HoloType.HOL, s))
        for s in range(1, n + 1):
            gens.append(Generator(self.f01(s), f"F{s}^01", Factor.K, HoloType.ANTI, s))
        gens.append(Generator(self.i, "I", Factor.P, HoloType.REAL))
        for s in range(1, n + 1):
            gens.append(Generator(self.g10(s), f"G{s}^10", Factor.P, HoloType.HOL, s))
        for s in range(1, n + 1):
            gens.append(Generator(self.g01(s), f"G{s}^01", Factor.P, HoloType.ANTI, s))
        self.generators: tuple[Generator, ...] = tuple(sorted(gens, key=lambda g: g.id))
        self.names = tuple(g.name for g in self.generators)
        self.index_of = {g.name: g.id for g in self.generators}

        bit = lambda idx: 1 << idx  # noqa: E731
        self.k_mask = (1 << (2 * n + 2)) - 1
        self.p_mask = ((1 << self.dim) - 1) ^ self.k_mask
        self.i_mask = bit(self.i)
        self.k_hol_mask = bit(0) | sum(bit(self.f10(s)) for s in range(1, n + 1))
        self.k_anti_mask = bit(1) | sum(bit(self.f01(s)) for s in range(1, n + 1))
        self.g10_mask = sum(bit(self.g10(s)) for s in range(1, n + 1))
        self.g01_mask = sum(bit(self.g01(s)) for s in range(1, n + 1))
        self.full_mask = (1 << self.dim) - 1
        # complex conjugation permutes generators: Z<->Zbar, F10<->F01, G10<->G01, I fixed
        conj = list(range(self.dim))
        conj[0], conj[1] = 1, 0
        for s in range(1, n + 1):
            conj[self.f10(s)], conj[self.f01(s)] = self.f01(s), self.f10(s)
            conj[self.g10(s)], conj[self.g01(s)] = self.g01(s), self.g10(s)
        self.conj_perm = tuple(conj)

    # generator indices
    z = 0
    zbar = 1

    def f10(self, s: int) -> int:
        return 1 + s

    def f01(self, s: int) -> int:
        return 1 + self.n + s

    @property
    def i(self) -> int:
        return 2 * self.n + 2

    def g10(self, s: int) -> int:
        return 2 * self.n + 2 + s

    def g01(self, s: int) -> int:
        return 3 * self.n + 2 + s

    def stratum_of(self, mask: int) -> "Stratum":
        k = mask & self.k_mask
        p = mask & self.p_mask
        return Stratum(
            bidegree=(popcount(k), popcount(p)),
            k_type=(popcount(mask & self.k_hol_mask), popcount(mask & self.k_anti_mask)),
            p_type=(popcount(mask & self.g10_mask), popcount(mask & self.g01_mask)),
            has_i=bool(mask & self.i_mask),
        )

    def legs(self, mask: int) -> list[int]:
        out, idx = [], 0
        while mask:
            if mask & 1:
                out.append(idx)
            mask >>= 1
            idx += 1
        return out

    def mask_of(self, names: Iterable[str]) -> int:
        m = 0
        for nm in names:
            m |= 1 << self.index_of[nm]
        return m


@lru_cache(maxsize=None)
def layout(n: int) -> Layout:
    return Layout(n)


@dataclass(frozen=True)
class Stratum:
    """Fine grading of a monomial.  A filter may leave any field as ``None``."""

    bidegree: tuple[int, int] | None = None
    k_type: tuple[int, int] | None = None
    p_type: tuple[int, int] | None = None
    has_i: bool | None = None

    def contains(self, other: "Stratum") -> bool:
        for f in ("bidegree", "k_type", "p_type", "has_i"):
            want = getattr(self, f)
            if want is not None and getattr(other, f) != want:
                return False
        return True


class Multiform:
    """Sparse alternating multilinear form; immutable value type.

    ``terms`` maps a monomial bitmask to its nonzero coefficient.
    """

    __slots__ = ("n", "terms", "_layout")

    def __init__(self, n: int, terms: Mapping[int, Scalar] | None = None):
        self.n = n
        self._layout = layout(n)
        clean = {}
        if terms:
            for m, c in terms.items():
                c = as_scalar(c)
                if c:
                    clean[m] = c
        self.terms: dict[int, Scalar] = clean

    @classmethod
    def _trusted(cls, n: int, terms: dict[int, Scalar]) -> "Multiform":
        f = object.__new__(cls)
        f.n = n
        f._layout = layout(n)
        f.terms = terms
        return f

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n: int) -> "Multiform":
        return cls._trusted(n, {})

    @classmethod
    def one(cls, n: int, c=ONE) -> "Multiform":
        return cls(n, {0: c})

    @classmethod
    def dual(cls, n: int, idx: int, c=ONE) -> "Multiform":
        """The dual one-form of generator ``idx``."""
        return cls(n, {1 << idx: c})

    @classmethod
    def monomial(cls, n: int, names: Iterable[str], c=ONE) -> "Multiform":
        """Wedge of named dual generators, in the order given."""
        lay = layout(n)
        mask, sign = 0, 1
        for nm in names:
            b = 1 << lay.index_of[nm]
            if mask & b:
                return cls.zero(n)
            sign *= mask_sign(mask, b)
            mask |= b
        return cls(n, {mask: as_scalar(c) * sign})

    @property
    def layout(self) -> Layout:
        return self._layout

    # linear structure --------------------------------------------------
    def _check(self, other: "Multiform"):
        if not isinstance(other, Multiform):
            raise TypeError(f"expected Multiform, got {type(other).__name__}")
        if other.n != self.n:
            raise ModelMismatchError(f"rank mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "Multiform") -> "Multiform":
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m)
            if v is None:
                out[m] = c
            else:
                v = v + c
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Multiform._trusted(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Multiform":
        return Multiform._trusted(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Multiform") -> "Multiform":
        return self + (-other)

    def scale(self, c) -> "Multiform":
        c = as_scalar(c)
        if c is NotImplemented:
            raise TypeError("scale expects a scalar")
        if not c:
            return Multiform.zero(self.n)
        if c == ONE:
            return self
        return Multiform._trusted(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Multiform):
            return wedge(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __xor__(self, other: "Multiform") -> "Multiform":
        return wedge(self, other)

    # comparisons -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, Multiform):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[int, Scalar]]:
        return iter(sorted(self.terms.items()))

    # grading -----------------------------------------------------------
    def degrees(self) -> set[int]:
        return {popcount(m) for m in self.terms}

    @property
    def degree(self) -> int | None:
        """Total degree if homogeneous, else ``None`` (0 for the zero form)."""
        ds = self.degrees()
        if not ds:
            return 0
        return ds.pop() if len(ds) == 1 else None

    def strata(self) -> dict[Stratum, "Multiform"]:
        buckets: dict[Stratum, dict[int, Scalar]] = {}
        lay = self._layout
        for m, c in self.terms.items():
            buckets.setdefault(lay.stratum_of(m), {})[m] = c
        return {s: Multiform._trusted(self.n, t) for s, t in buckets.items()}

    def filter(self, pred: Callable[[int], bool]) -> "Multiform":
        return Multiform._trusted(self.n, {m: c for m, c in self.terms.items() if pred(m)})

    def coefficient(self, names: Iterable[str]) -> Scalar:
        """Coefficient on the monomial given by ``names`` (in that order)."""
        mono = Multiform.monomial(self.n, names)
        if mono.is_zero():
            return ZERO
        (mask, sign), = mono.terms.items()
        return self.terms.get(mask, ZERO) * sign

    def evaluate(self, vectors: list[dict[int, Scalar]]) -> Scalar:
        """Evaluate on tangent vectors given as {generator id: coefficient}."""
        acc = self
        for v in vectors:
            acc = insert(v, acc)
        return acc.terms.get(0, ZERO)

    def serialize(self) -> list[list]:
        """Canonical form: ``[[names...], re, im]`` in monomial order."""
        lay = self._layout
        out = []
        for m, c in sorted(self.terms.items(), key=lambda t: _mono_key(t[0])):
            out.append([[lay.names[i] for i in lay.legs(m)], str(c.re), str(c.im)])
        return out

    def __repr__(self):
        if not self.terms:
            return f"Multiform(n={self.n}, 0)"
        parts = []
        lay = self._layout
        for m, c in sorted(self.terms.items(), key=lambda t: _mono_key(t[0]))[:8]:
            legs = "^".join(lay.names[i] + "*" for i in lay.legs(m)) or "1"
            parts.append(f"({c}){legs}")
        more = "" if len(self.terms) <= 8 else f" + ...[{len(self.terms)} terms]"
        return f"Multiform(n={self.n}, " + " + ".join(parts) + more + ")"

    @classmethod
    def deserialize(cls, n: int, data: list) -> "Multiform":
        from fractions import Fraction

        total = cls.zero(n)
        for names, re, im in data:
            total = total + cls.monomial(n, names, Scalar(Fraction(re), Fraction(im)))
        return total


def _mono_key(mask: int) -> tuple[int, list[int]]:
    legs = [i for i in range(mask.bit_length()) if mask >> i & 1]
    return (len(legs), legs)


def wedge(a: Multiform, b: Multiform) -> Multiform:
    a._check(b)
    if not a.terms or not b.terms:
        return Multiform.zero(a.n)
    out: dict[int, Scalar] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            c = ca * cb
            if mask_sign(ma, mb) < 0:
                c = -c
            m = ma | mb
            v = out.get(m)
            out[m] = c if v is None else v + c
    return Multiform._trusted(a.n, {m: c for m, c in out.items() if c})


def wedge_all(n: int, forms: Iterable[Multiform]) -> Multiform:
    acc = Multiform.one(n)
    for f in forms:
        acc = wedge(acc, f)
    return acc


def power(a: Multiform, k: int) -> Multiform:
    if k < 0:
        raise ValueError("negative wedge power")
    acc = Multiform.one(a.n)
    for _ in range(k):
        acc = wedge(acc, a)
    return acc


def _as_vector(v) -> dict[int, Scalar]:
    if isinstance(v, int):
        return {v: ONE}
    return {k: as_scalar(c) for k, c in v.items() if as_scalar(c)}


def insert(v, a: Multiform) -> Multiform:
    """Interior product with a tangent vector.

    ``v`` is a generator id or a mapping {generator id: coefficient}.
    """
    vec = _as_vector(v)
    out: dict[int, Scalar] = {}
    for m, c in a.terms.items():
        for idx, coef in vec.items():
            b = 1 << idx
            if not m & b:
                continue
            val = c * coef
            if popcount(m & (b - 1)) & 1:
                val = -val
            key = m ^ b
            prev = out.get(key)
            out[key] = val if prev is None else prev + val
    return Multiform._trusted(a.n, {m: c for m, c in out.items() if c})


def project(a: Multiform, stratum: Stratum | None = None, **fields) -> Multiform:
    """Keep only the monomials lying in ``stratum`` (fields may be partial)."""
    if stratum is None:
        stratum = Stratum(**fields)
    lay = a.layout
    return a.filter(lambda m: stratum.contains(lay.stratum_of(m)))


def conjugate(a: Multiform) -> Multiform:
    """Complex conjugation: swaps holomorphic/antiholomorphic legs, fixes I."""
    lay = a.layout
    perm = lay.conj_perm
    out = {}
    for m, c in a.terms.items():
        legs = lay.legs(m)
        images = [perm[i] for i in legs]
        sign = _perm_sign(images)
        new = 0
        for i in images:
            new |= 1 << i
        val = c.conjugate()
        out[new] = -val if sign < 0 else val
    return Multiform._trusted(a.n, out)


def _perm_sign(seq: list[int]) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1
