"""Exact scalars: rationals and quadratic surds ``a + b*sqrt(m)``.

Grid coordinates are plain ``int``; rational values are ``Fraction``.  A
:class:`Surd` only appears where a Euclidean distance has to be added to a
coordinate (the lifted last coordinate of an extension image), so arithmetic
is only supported between surds sharing the same radicand.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Union


class Surd:
    """``a + b*sqrt(m)`` with rational ``a, b``, ``b != 0`` and squarefree ``m > 1``.

    Build values with :func:`surd`, which collapses to a rational when possible.
    """

    __slots__ = ("a", "b", "m")

    def __init__(self, a: Fraction, b: Fraction, m: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.m = m

    def _coerce(self, other):
        if isinstance(other, Surd):
            if other.m != self.m:
                raise ValueError(f"mixed radicands sqrt({self.m}) and sqrt({other.m})")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return NotImplemented

    def __add__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return surd(self.a + c[0], self.b + c[1], self.m)

    __radd__ = __add__

    def __neg__(self):
        return Surd(-self.a, -self.b, self.m)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        return surd(self.a - c[0], self.b - c[1], self.m)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        c = self._coerce(other)
        if c is NotImplemented:
            return c
        a, b = c
        return surd(self.a * a + self.b * b * self.m, self.a * b + self.b * a, self.m)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and other != 0:
            return surd(self.a / other, self.b / other, self.m)
        return NotImplemented

    def __pow__(self, n: int):
        if n != 2:
            raise ValueError("only squaring is supported")
        return self * self

    def sign(self) -> int:
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa >= 0 and sb >= 0:
            return 1
        if sa <= 0 and sb <= 0:
            return -1
        # opposite signs: compare a^2 with b^2 m
        lhs, rhs = self.a * self.a, self.b * self.b * self.m
        return sa if lhs > rhs else sb

    def _cmp(self, other) -> int:
        diff = self - other
        if isinstance(diff, Surd):
            return diff.sign()
        return (diff > 0) - (diff < 0)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (self.a, self.b, self.m) == (other.a, other.b, other.m)
        return False

    def __hash__(self):
        return hash(("surd", self.a, self.b, self.m))

    def __float__(self):
        return float(self.a) + float(self.b) * self.m ** 0.5

    def __repr__(self):
        return f"Surd({self.a}, {self.b}, {self.m})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, Surd]


def normalize(x) -> Scalar:
    """Canonical exact form: integral rationals become ``int``."""
    if isinstance(x, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Surd):
        return x
    raise TypeError(f"not an exact scalar: {x!r}")


def surd(a, b, m: int) -> Scalar:
    """``a + b*sqrt(m)`` simplified; returns a rational when the root term vanishes."""
    a, b = Fraction(a), Fraction(b)
    if m < 0:
        raise ValueError("negative radicand")
    s, m = _square_part(m)
    b *= s
    if b == 0 or m == 1:
        return normalize(a + b)
    return Surd(a, b, m)


def _square_part(m: int) -> tuple[int, int]:
    """Split ``m = s*s*r`` with ``r`` squarefree; returns ``(s, r)``."""
    if m == 0:
        return 0, 1
    s, r, p = 1, m, 2
    while p * p <= r:
        while r % (p * p) == 0:
            r //= p * p
            s *= p
        p += 1
    return s, r


def exact_sqrt(q) -> Scalar:
    """Square root of a nonnegative rational as an exact scalar."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of a negative number")
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn == num and rd * rd == den:
        return normalize(Fraction(rn, rd))
    # sqrt(n/d) = sqrt(n*d)/d
    return surd(0, Fraction(1, den), num * den)


def sort_key(x: Scalar) -> tuple:
    """Deterministic total order; numeric on rationals."""
    if isinstance(x, Surd):
        return (x.a, x.b, x.m)
    return (x, 0, 0)


def format_scalar(x: Scalar) -> Union[int, str]:
    """JSON form: ``int`` for integers, ``"p/q"`` for rationals, ``"a+b*sqrt(m)"`` for surds."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, Surd):
        return f"{x.a}+{x.b}*sqrt({x.m})"
    raise TypeError(f"not an exact scalar: {x!r}")


_SURD_RE = re.compile(r"^\s*(-?\d+(?:/\d+)?)\s*\+\s*(-?\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*$")
_RAT_RE = re.compile(r"^\s*-?\d+(?:\s*/\s*\d+)?\s*$")


def parse_scalar(v) -> Scalar:
    """Inverse of :func:`format_scalar`; raises ``ValueError`` on anything else."""
    if isinstance(v, bool):
        raise ValueError(f"not a scalar: {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            m = _SURD_RE.match(v)
            if m:
                return surd(Fraction(m.group(1)), Fraction(m.group(2)), int(m.group(3)))
            if _RAT_RE.match(v):
                return normalize(Fraction(v.replace(" ", "")))
        except ZeroDivisionError:
            pass
    raise ValueError(f"not an exact scalar: {v!r}")
