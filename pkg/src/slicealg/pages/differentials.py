"""Differential tables extended by the graded Leibniz rule.

A table assigns to some generators an image polynomial; everything else
maps to 0.  The extension to monomials uses the Koszul sign on the parity
of c + w.  Degreewise the differential becomes an integer matrix between
monomial bases, which is all the page turner needs.
"""

from __future__ import annotations

from ..graded import Degree
from ..graded.rings import PolyElement, RingPresentation
from ..exact.snf import solve_many


class DifferentialTable:
    def __init__(self, pres: RingPresentation, page: int, images: dict, name=""):
        self.pres = pres
        self.page = page
        self.shift = Degree(-1, 0, page)
        self.name = name or "d%d" % page
        self.images = {}
        for gname, img in images.items():
            assert gname in pres.gen_index, "unknown generator %s" % gname
            img = pres.coerce(img)
            if not img.is_zero():
                self.images[gname] = img
        self._parity = [g.degree.underlying % 2 for g in pres.gens]

    def degree_audit(self):
        """Every image must be homogeneous of the source degree plus the shift."""
        for gname, img in self.images.items():
            want = self.pres.gens[self.pres.gen_index[gname]].degree.add(self.shift)
            got = img.degree()
            if got != want:
                raise ValueError(
                    "degree-audit-failed: %s(%s) has degree %s, expected %s"
                    % (self.name, gname, tuple(got), tuple(want))
                )

    def apply_monomial(self, exps) -> PolyElement:
        pres = self.pres
        out = pres.zero()
        prefix = 0
        for i, e in enumerate(exps):
            if e:
                gname = pres.gens[i].name
                img = self.images.get(gname)
                if img is not None:
                    if self._parity[i]:
                        coef = e % 2  # odd generator: paired terms cancel
                    else:
                        coef = e
                    if coef:
                        sign = -1 if prefix % 2 else 1
                        rest = list(exps)
                        rest[i] -= 1
                        out = out + (coef * sign) * (pres.monomial(rest) * img)
                prefix += e * self._parity[i]
        return out

    def apply(self, poly) -> PolyElement:
        poly = self.pres.coerce(poly)
        out = self.pres.zero()
        for exps, c in poly.terms.items():
            out = out + c * self.apply_monomial(exps)
        return out

    def columns_at(self, degree):
        """Matrix columns of the differential leaving the given degree."""
        degree = Degree(*degree)
        target = degree.add(self.shift)
        cols = []
        for m in self.pres.monomials_at(degree):
            img = self.apply_monomial(m)
            cols.append(self.pres.vector_of(img, target))
        return cols

    def rows_at(self, degree):
        """Same matrix, as rows indexed by target monomials."""
        cols = self.columns_at(degree)
        n_t = len(self.pres.monomials_at(Degree(*degree).add(self.shift)))
        return [[col[i] for col in cols] for i in range(n_t)]

    def d_squared_witnesses(self, degrees):
        """Degrees where d(d(m)) fails to land in the relation ideal."""
        bad = []
        pres = self.pres
        for d in degrees:
            d = Degree(*d)
            dd = d.add(self.shift).add(self.shift)
            rel_cols = pres.relation_columns_at(dd)
            n = len(pres.monomials_at(dd))
            for m in pres.monomials_at(d):
                p2 = self.apply(self.apply_monomial(m))
                if p2.is_zero():
                    continue
                vec = pres.vector_of(p2, dd)
                if not any(vec):
                    continue
                ok = False
                if rel_cols:
                    mat = [[rc[i] for rc in rel_cols] for i in range(n)]
                    ok = solve_many(mat, [vec], n, len(rel_cols)) is not None
                if not ok:
                    bad.append((d, pres.monomial_str(m), str(p2)))
        return bad
