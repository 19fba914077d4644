"""Trigraded degrees (c, w, s) and rectangular scan windows.

c is the integer part of the underlying grading, w the twisted part, s the
filtration.  The underlying degree is c + w, the slice weight is 2c + s.
Differentials on page r shift a degree by (-1, 0, r).
"""

from __future__ import annotations

from typing import NamedTuple


class Degree(NamedTuple):
    c: int
    w: int
    s: int

    def add(self, other: "Degree") -> "Degree":
        return Degree(self.c + other.c, self.w + other.w, self.s + other.s)

    def sub(self, other: "Degree") -> "Degree":
        return Degree(self.c - other.c, self.w - other.w, self.s - other.s)

    def scale(self, k: int) -> "Degree":
        return Degree(self.c * k, self.w * k, self.s * k)

    @property
    def underlying(self) -> int:
        return self.c + self.w

    @property
    def weight(self) -> int:
        # slice weight 2c + s, positive for every admissible generator
        return 2 * self.c + self.s

    @property
    def is_integer(self) -> bool:
        return self.w == 0

    @staticmethod
    def differential_shift(r: int) -> "Degree":
        return Degree(-1, 0, r)


ZERO = Degree(0, 0, 0)


def differential_shift(r: int) -> Degree:
    return Degree(-1, 0, r)


class Window(NamedTuple):
    """Scan extents: underlying degree at most max_underlying, |w| and |s| capped.

    The underlying grading alone never cuts scans down to finitely many
    degrees (powers of the twisted units have underlying degree zero), so
    every exhaustive claim is made relative to all three extents.
    """

    max_underlying: int
    max_w: int
    max_s: int

    def contains(self, d: Degree) -> bool:
        return (
            d.c + d.w <= self.max_underlying
            and abs(d.w) <= self.max_w
            and abs(d.s) <= self.max_s
        )

    def degrees(self):
        """All degrees in the window with c >= 0 (generators have c >= 0)."""
        for c in range(0, self.max_underlying + self.max_w + 1):
            for w in range(-self.max_w, self.max_w + 1):
                if c + w > self.max_underlying:
                    continue
                for s in range(-self.max_s, self.max_s + 1):
                    yield Degree(c, w, s)

    def integer_degrees(self):
        for c in range(0, self.max_underlying + 1):
            for s in range(-self.max_s, self.max_s + 1):
                yield Degree(c, 0, s)
