"""Presented graded-commutative rings with exact degreewise enumeration.

A RingPresentation is a finite list of generators with (c, w, s) degrees
and integer polynomial relations.  The only admissibility requirement is
that every generator has positive slice weight 2c + s, which makes each
degree a finite problem.  Enumeration is exact: a depth first search over
exponents of the generators with c > 0, pruned by weight-rate bounds, and
the single c = 0 generator (when present) solved for afterwards.

Coefficients are plain Python ints throughout.  2-local or mod 2 behaviour
is applied by the consumers at the matrix level.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .degrees import Degree, ZERO


class Generator(NamedTuple):
    name: str
    degree: Degree


class PolyElement:
    """Integer polynomial in the generators of one presentation.

    terms maps exponent tuples to nonzero integer coefficients.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    def copy(self):
        return PolyElement(self.ring, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Degree of a homogeneous element, None for 0.  Asserts homogeneity."""
        deg = None
        for e in self.terms:
            d = self.ring.exps_degree(e)
            if deg is None:
                deg = d
            else:
                assert d == deg, "inhomogeneous element"
        return deg

    def __add__(self, other):
        other = self.ring.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return PolyElement(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return PolyElement(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return PolyElement(self.ring, {e: c * other for e, c in self.terms.items()})
        other = self.ring.coerce(other)
        out = {}
        n = len(self.ring.gens)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return PolyElement(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        assert k >= 0
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            other = self.ring.coerce(other)
        if not isinstance(other, PolyElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        return self.ring.poly_str(self)

    __repr__ = __str__


def grevlex_key(exps):
    # graded reverse lexicographic, smallest first when used with sorted()
    return (sum(exps), tuple(-e for e in reversed(exps)))


class RingPresentation:
    def __init__(self, gens, relations=(), name=""):
        self.gens = tuple(Generator(n, Degree(*d)) for n, d in gens)
        self.name = name
        self.gen_index = {g.name: i for i, g in enumerate(self.gens)}
        assert len(self.gen_index) == len(self.gens), "duplicate generator names"
        for g in self.gens:
            if g.degree.weight <= 0:
                raise ValueError("non-positive-generator: %s" % g.name)
        czero = [i for i, g in enumerate(self.gens) if g.degree.c == 0]
        assert len(czero) <= 1, "at most one c = 0 generator is supported"
        self._czero = czero[0] if czero else None
        self._cpos = [i for i, g in enumerate(self.gens) if g.degree.c > 0]
        self._mono_cache = {}
        self._index_cache = {}
        self._relcol_cache = {}
        self.relations = tuple(self.coerce(r) for r in relations)
        for r in self.relations:
            if r.is_zero():
                raise ValueError("degree-mismatch: zero relation")
            r.degree()  # asserts homogeneity
        # weight-rate bounds per suffix of the c > 0 generator list
        self._suffix_rates = self._make_suffix_rates()

    # -- element constructors

    def zero(self) -> PolyElement:
        return PolyElement(self, {})

    def one(self) -> PolyElement:
        return PolyElement(self, {(0,) * len(self.gens): 1})

    def gen(self, name: str) -> PolyElement:
        e = [0] * len(self.gens)
        e[self.gen_index[name]] = 1
        return PolyElement(self, {tuple(e): 1})

    def monomial(self, exps) -> PolyElement:
        return PolyElement(self, {tuple(exps): 1})

    def coerce(self, x) -> PolyElement:
        if isinstance(x, PolyElement):
            if x.ring is self:
                return x
            # same generator list, e.g. a relation built before the quotient
            assert x.ring.gens == self.gens, "element of a different presentation"
            return PolyElement(self, dict(x.terms))
        if isinstance(x, int):
            return PolyElement(self, {(0,) * len(self.gens): x})
        raise TypeError("cannot coerce %r" % (x,))

    def exps_degree(self, exps) -> Degree:
        c = w = s = 0
        for e, g in zip(exps, self.gens):
            if e:
                c += e * g.degree.c
                w += e * g.degree.w
                s += e * g.degree.s
        return Degree(c, w, s)

    # -- enumeration

    def _make_suffix_rates(self):
        # extremes of w/c and s/c over each generator suffix, stored as
        # numerator/denominator pairs so the DFS bounds stay in integers
        n = len(self._cpos)
        cur = None
        out = [None] * (n + 1)
        for i in range(n - 1, -1, -1):
            g = self.gens[self._cpos[i]].degree
            wr = Fraction(g.w, g.c)
            sr = Fraction(g.s, g.c)
            if cur is None:
                cur = (wr, wr, sr, sr)
            else:
                cur = (
                    min(cur[0], wr),
                    max(cur[1], wr),
                    min(cur[2], sr),
                    max(cur[3], sr),
                )
            out[i] = tuple(
                part for f in cur for part in (f.numerator, f.denominator)
            )
        return out

    def monomials_at(self, degree) -> tuple:
        """All monomial exponent tuples of the given degree, in a fixed order."""
        degree = Degree(*degree)
        hit = self._mono_cache.get(degree)
        if hit is not None:
            return hit
        found = []
        ngens = len(self.gens)
        cpos = self._cpos
        rates = self._suffix_rates
        ncp = len(cpos)
        gdegs = [self.gens[p].degree for p in cpos]
        stack = [0] * ncp

        def emit():
            e = [0] * ngens
            for idx, expo in zip(cpos, stack):
                e[idx] = expo
            found.append(tuple(e))

        def dfs(i, c_rem, w_rem, s_rem):
            if i == ncp:
                if c_rem == 0 and w_rem == 0 and s_rem == 0:
                    emit()
                return
            if c_rem == 0:
                if w_rem == 0 and s_rem == 0:
                    for j in range(i, ncp):
                        stack[j] = 0
                    emit()
                return
            wn0, wd0, wn1, wd1, sn0, sd0, sn1, sd1 = rates[i]
            if wn0 * c_rem > w_rem * wd0 or w_rem * wd1 > wn1 * c_rem:
                return
            if sn0 * c_rem > s_rem * sd0 or s_rem * sd1 > sn1 * c_rem:
                return
            gc, gw, gs = gdegs[i]
            e = 0
            while c_rem >= 0:
                stack[i] = e
                dfs(i + 1, c_rem, w_rem, s_rem)
                e += 1
                c_rem -= gc
                w_rem -= gw
                s_rem -= gs

        if self._czero is None:
            if degree.c >= 0:
                dfs(0, degree.c, degree.w, degree.s)
        else:
            g0 = self.gens[self._czero].degree
            lam = degree.weight
            if lam >= 0:
                amax = lam // g0.weight if g0.weight > 0 else 0
                for alpha in range(amax + 1):
                    rem = degree.sub(g0.scale(alpha))
                    if rem.c < 0:
                        continue
                    before = len(found)
                    dfs(0, rem.c, rem.w, rem.s)
                    for j in range(before, len(found)):
                        e = list(found[j])
                        e[self._czero] = alpha
                        found[j] = tuple(e)
        result = tuple(found)
        self._mono_cache[degree] = result
        return result

    def index_at(self, degree) -> dict:
        degree = Degree(*degree)
        hit = self._index_cache.get(degree)
        if hit is None:
            hit = {e: i for i, e in enumerate(self.monomials_at(degree))}
            self._index_cache[degree] = hit
        return hit

    def vector_of(self, poly: PolyElement, degree) -> list:
        """Coefficient vector of a homogeneous element in the monomial basis."""
        idx = self.index_at(degree)
        vec = [0] * len(idx)
        for e, c in poly.terms.items():
            assert e in idx, "degree-mismatch: term %s not of degree %s" % (
                self.monomial_str(e),
                tuple(degree),
            )
            vec[idx[e]] = c
        return vec

    def relation_columns_at(self, degree):
        """Columns spanning the relation submodule in degree d."""
        degree = Degree(*degree)
        hit = self._relcol_cache.get(degree)
        if hit is not None:
            return hit
        idx = self.index_at(degree)
        cols = []
        for r in self.relations:
            rd = r.degree()
            for m in self.monomials_at(degree.sub(rd)):
                cols.append(self.vector_of(self.monomial(m) * r, degree))
        self._relcol_cache[degree] = cols
        return cols

    def degreewise_group(self, degree, two_local=False):
        from ..exact import cokernel

        degree = Degree(*degree)
        return cokernel(
            len(self.monomials_at(degree)),
            self.relation_columns_at(degree),
            two_local=two_local,
        )

    def hilbert_count(self, degree) -> int:
        """Free rank in one degree for a relation free presentation."""
        assert not self.relations
        return len(self.monomials_at(degree))

    # -- printing

    def monomial_str(self, exps) -> str:
        parts = []
        for e, g in zip(exps, self.gens):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append("%s^%d" % (g.name, e))
        return "*".join(parts) if parts else "1"

    def poly_str(self, poly: PolyElement) -> str:
        if not poly.terms:
            return "0"
        items = sorted(poly.terms.items(), key=lambda ec: grevlex_key(ec[0]), reverse=True)
        out = []
        for e, c in items:
            m = self.monomial_str(e)
            if m == "1":
                t = str(abs(c))
            elif abs(c) == 1:
                t = m
            else:
                t = "%d*%s" % (abs(c), m)
            out.append(("- " if c < 0 else "+ " if out else "") + t)
        return " ".join(out)

    def vector_str(self, vec, degree) -> str:
        monos = self.monomials_at(degree)
        p = PolyElement(self, {monos[i]: vec[i] for i in range(len(vec)) if vec[i]})
        return self.poly_str(p)


def enumerate_monomials(pres: RingPresentation, degree):
    """Module level alias, handy for callers that only enumerate."""
    return pres.monomials_at(degree)
