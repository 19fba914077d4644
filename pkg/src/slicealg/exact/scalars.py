"""Scalars of the 2-local integers Z_(2).

A TwoLocalScalar is a reduced fraction whose denominator is odd and
positive.  Division is only legal when the 2-adic valuation of the divisor
is at most that of the dividend; everything else about the arithmetic is
plain exact rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def v2(x) -> int:
    """2-adic valuation.  Accepts int, Fraction or TwoLocalScalar.

    Raises ValueError on zero, whose valuation is not a finite number.
    """
    if isinstance(x, TwoLocalScalar):
        x = x._f
    if isinstance(x, int):
        num, den = x, 1
    else:
        num, den = x.numerator, x.denominator
    if num == 0:
        raise ValueError("v2(0) is undefined")
    v = 0
    while num % 2 == 0:
        num //= 2
        v += 1
    while den % 2 == 0:
        den //= 2
        v -= 1
    return v


class TwoLocalScalar:
    """An element of Z_(2), kept reduced with an odd positive denominator."""

    __slots__ = ("_f",)

    def __init__(self, numerator=0, denominator=1):
        if isinstance(numerator, TwoLocalScalar):
            f = numerator._f
            if denominator != 1:
                f = f / Fraction(denominator)
        else:
            f = Fraction(numerator, denominator)
        if f.denominator % 2 == 0:
            raise ValueError("denominator must be odd in Z_(2): %s" % f)
        self._f = f

    @property
    def numerator(self) -> int:
        return self._f.numerator

    @property
    def denominator(self) -> int:
        return self._f.denominator

    def as_fraction(self) -> Fraction:
        return self._f

    def is_zero(self) -> bool:
        return self._f == 0

    def is_unit(self) -> bool:
        """Units of Z_(2) are the scalars of valuation zero."""
        return self._f != 0 and self._f.numerator % 2 != 0

    def valuation(self) -> int:
        return v2(self._f)

    def _coerce(self, other):
        if isinstance(other, TwoLocalScalar):
            return other._f
        if isinstance(other, (int, Fraction)):
            return Fraction(other)
        return None

    def __add__(self, other):
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return TwoLocalScalar(self._f + f)

    __radd__ = __add__

    def __sub__(self, other):
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return TwoLocalScalar(self._f - f)

    def __rsub__(self, other):
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return TwoLocalScalar(f - self._f)

    def __mul__(self, other):
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return TwoLocalScalar(self._f * f)

    __rmul__ = __mul__

    def __truediv__(self, other):
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        if f == 0:
            raise ZeroDivisionError("division by zero in Z_(2)")
        if self._f == 0:
            return TwoLocalScalar(0)
        if v2(f) > v2(self._f):
            raise ValueError(
                "not divisible in Z_(2): v2(%s) < v2(%s)" % (self._f, f)
            )
        return TwoLocalScalar(self._f / f)

    def __rtruediv__(self, other):
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return TwoLocalScalar(f) / self

    def __neg__(self):
        return TwoLocalScalar(-self._f)

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit in Z_(2)")
            return TwoLocalScalar(self._f ** n)
        return TwoLocalScalar(self._f ** n)

    def __eq__(self, other):
        f = self._coerce(other)
        if f is None:
            return NotImplemented
        return self._f == f

    def __hash__(self):
        return hash(self._f)

    def __bool__(self):
        return self._f != 0

    def __repr__(self):
        if self._f.denominator == 1:
            return "TwoLocalScalar(%d)" % self._f.numerator
        return "TwoLocalScalar(%d, %d)" % (self._f.numerator, self._f.denominator)

    def __str__(self):
        return str(self._f)
