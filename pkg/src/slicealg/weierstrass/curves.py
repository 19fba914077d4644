"""Plane cubics in long form and their unipotent coordinate changes.

A curve is y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6.  The coordinate
changes keep the leading coefficient 1 (scaling parameter u = 1): x goes to
x + r, y goes to y + s*x + t.  Composition and inversion are derived from
substitution and verified by the test suite on random instances.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mpoly import MPoly, _coerce


@dataclass(frozen=True)
class Curve:
    a1: MPoly
    a2: MPoly
    a3: MPoly
    a4: MPoly
    a6: MPoly

    @staticmethod
    def make(a1, a2, a3, a4, a6) -> "Curve":
        return Curve(*(_coerce(v) for v in (a1, a2, a3, a4, a6)))

    def equation(self) -> MPoly:
        """Defining polynomial, as y^2 + a1xy + a3y - x^3 - a2x^2 - a4x - a6."""
        x, y = MPoly.var("x"), MPoly.var("y")
        return (
            y * y + self.a1 * x * y + self.a3 * y
            - x ** 3 - self.a2 * x * x - self.a4 * x - self.a6
        )


@dataclass(frozen=True)
class Transform:
    r: MPoly
    s: MPoly
    t: MPoly

    @staticmethod
    def make(r, s, t) -> "Transform":
        return Transform(_coerce(r), _coerce(s), _coerce(t))


IDENTITY = Transform.make(0, 0, 0)

# Exponent patterns an equation in long form may touch.
_EQ_KEYS = {(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)}


def transform_curve(curve: Curve, phi: Transform) -> Curve:
    """Apply x -> x + r, y -> y + s*x + t and read off the new coefficients.

    The substituted equation must stay in long form; anything else means the
    transform was not unipotent and is a hard error.
    """
    x, y = MPoly.var("x"), MPoly.var("y")
    moved = curve.equation().substitute(
        {"x": x + phi.r, "y": y + phi.s * x + phi.t}
    )
    coeff = moved.coeff_split(("x", "y"))
    assert set(coeff) <= _EQ_KEYS, "substitution left long form"
    assert coeff.get((0, 2), MPoly()) == 1
    assert coeff.get((3, 0), MPoly()) == -1
    zero = MPoly()
    new = Curve(
        a1=coeff.get((1, 1), zero),
        a2=-coeff.get((2, 0), zero),
        a3=coeff.get((0, 1), zero),
        a4=-coeff.get((1, 0), zero),
        a6=-coeff.get((0, 0), zero),
    )
    # Reconstruction must reproduce the substituted equation exactly.
    assert new.equation() == moved
    return new


def compose(first: Transform, then: Transform) -> Transform:
    """Transform equal to applying `first`, then `then`."""
    return Transform(
        first.r + then.r,
        first.s + then.s,
        first.t + then.t + first.s * then.r,
    )


def invert(phi: Transform) -> Transform:
    return Transform(-phi.r, -phi.s, -phi.t + phi.s * phi.r)
