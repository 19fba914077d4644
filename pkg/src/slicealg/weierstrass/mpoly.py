"""Sparse multivariate polynomials over Fraction, keyed by variable name.

Used for the curve-transformation derivations, where the variable set is
open-ended (curve coefficients, translation parameters, coordinates).  The
algebroid layer converts to a fixed-exponent representation for speed.
"""

from __future__ import annotations

from fractions import Fraction


def _merge(key1, key2):
    d = dict(key1)
    for name, e in key2:
        d[name] = d.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in d.items() if e))


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[k] = c

    @staticmethod
    def var(name: str) -> "MPoly":
        return MPoly({((name, 1),): Fraction(1)})

    @staticmethod
    def const(c) -> "MPoly":
        return MPoly({(): Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        other = _coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, Fraction(0)) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        p = MPoly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = MPoly()
        p.terms = {k: -c for k, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = _merge(k1, k2)
                v = out.get(k, Fraction(0)) + c1 * c2
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        p = MPoly()
        p.terms = out
        return p

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        scalar = Fraction(scalar)
        p = MPoly()
        p.terms = {k: c / scalar for k, c in self.terms.items()}
        return p

    def __pow__(self, e: int):
        out = MPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, assignments: dict) -> "MPoly":
        """Replace variables by polynomials; unlisted variables persist."""
        out = MPoly()
        for k, c in self.terms.items():
            term = MPoly.const(c)
            for name, e in k:
                rep = assignments.get(name)
                base = rep if rep is not None else MPoly.var(name)
                term = term * base ** e
            out = out + term
        return out

    def coeff_split(self, names) -> dict:
        """Collect by exponents of the given variables.

        Returns {exps_tuple: MPoly in the remaining variables}.
        """
        names = tuple(names)
        out = {}
        for k, c in self.terms.items():
            here = dict(k)
            exps = tuple(here.pop(n, 0) for n in names)
            rest = tuple(sorted(here.items()))
            bucket = out.setdefault(exps, MPoly())
            bucket.terms[rest] = bucket.terms.get(rest, Fraction(0)) + c
        for exps in list(out):
            out[exps].terms = {k: c for k, c in out[exps].terms.items() if c}
            if not out[exps].terms:
                del out[exps]
        return out

    def evaluate(self, values: dict) -> Fraction:
        total = Fraction(0)
        for k, c in self.terms.items():
            v = c
            for name, e in k:
                v *= Fraction(values[name]) ** e
            total += v
        return total

    def variables(self):
        seen = set()
        for k in self.terms:
            for name, _ in k:
                seen.add(name)
        return seen

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(
            self.terms.items(),
            key=lambda kc: (-sum(e for _, e in kc[0]), kc[0]),
        )
        parts = []
        for k, c in items:
            body = "*".join(
                name if e == 1 else "%s^%d" % (name, e) for name, e in k
            )
            mag = abs(c)
            if not body:
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = "%s*%s" % (mag, body)
            parts.append(("- " if c < 0 else "+ ") + piece)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[1:]

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, MPoly):
        return x
    return MPoly.const(x)


def two_local(poly: MPoly) -> bool:
    """True when every coefficient has odd denominator."""
    return all(c.denominator % 2 for c in poly.terms.values())
