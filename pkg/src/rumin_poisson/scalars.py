"""Exact Gaussian rationals: a + b*i with a, b in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "I_UNIT", "ZERO", "ONE", "as_scalar", "parse_scalar"]


class Scalar:
    """Immutable complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "Scalar":
        s = object.__new__(cls)
        object.__setattr__(s, "re", re)
        object.__setattr__(s, "im", im)
        return s

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        if type(other) is Scalar:
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b:
                return Scalar._raw(a * c, a * d)
            if not d:
                return Scalar._raw(a * c, b * c)
            return Scalar._raw(a * c - b * d, a * d + b * c)
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Scalar":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar._raw(self.re / n, -self.im / n)

    def conjugate(self) -> "Scalar":
        return Scalar._raw(self.re, -self.im)

    def norm2(self) -> Fraction:
        """|x|^2, exact."""
        return self.re * self.re + self.im * self.im

    # comparisons ------------------------------------------------------
    def __eq__(self, other):
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # display ----------------------------------------------------------
    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        im = _imag_str(abs(self.im))
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{im}"


def _imag_str(v: Fraction) -> str:
    if v == 1:
        return "i"
    if v == -1:
        return "-i"
    if v.denominator == 1:
        return f"{v}i"
    return f"{v.numerator}i/{v.denominator}"


def as_scalar(x):
    """Coerce ints, Fractions and Python complex with integral parts."""
    if type(x) is Scalar:
        return x
    if isinstance(x, (int, Rational)):
        return Scalar._raw(Fraction(x), Fraction(0))
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise TypeError("only integral complex literals convert exactly")
        return Scalar._raw(Fraction(int(x.real)), Fraction(int(x.imag)))
    return NotImplemented


def parse_scalar(text: str) -> Scalar:
    """Parse ``"2"``, ``"3i"``, ``"1/2-3i/4"``, ``"2+3i"`` and similar."""
    s = text.replace(" ", "").replace("j", "i")
    if not s:
        raise ValueError("empty scalar literal")
    # split into signed terms
    terms, cur = [], ""
    for pos, ch in enumerate(s):
        if ch in "+-" and pos > 0 and s[pos - 1] not in "/":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    re, im = Fraction(0), Fraction(0)
    for t in terms:
        if not t:
            continue
        if "i" in t:
            body = t.replace("i", "", 1)
            if body in ("", "+", "-"):
                body += "1"
            # allow forms "3/4" after removal of "i" (e.g. "3i/4")
            im += Fraction(body)
        else:
            re += Fraction(t)
    return Scalar._raw(re, im)


ZERO = Scalar._raw(Fraction(0), Fraction(0))
ONE = Scalar._raw(Fraction(1), Fraction(0))
I_UNIT = Scalar._raw(Fraction(0), Fraction(1))
