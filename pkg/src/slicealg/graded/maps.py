"""Ring maps between presentations, with degree and relation verification."""

from __future__ import annotations

from .degrees import Degree
from .rings import PolyElement, RingPresentation


class RingMap:
    """Multiplicative map determined by generator images.

    images maps source generator names to target elements.  Generators not
    listed are sent to 0, which is how truncated targets are expressed.
    """

    def __init__(self, source: RingPresentation, target: RingPresentation, images: dict, name=""):
        self.source = source
        self.target = target
        self.name = name
        self.images = {}
        for gname, img in images.items():
            assert gname in source.gen_index, "unknown generator %s" % gname
            self.images[gname] = target.coerce(img)
        self._pow_cache = {}

    def check_degrees(self):
        """Every generator image is homogeneous of the generator's degree."""
        for g in self.source.gens:
            img = self.images.get(g.name)
            if img is None or img.is_zero():
                continue
            d = img.degree()
            if d != g.degree:
                raise ValueError(
                    "degree-mismatch: %s has degree %s, image has degree %s"
                    % (g.name, tuple(g.degree), tuple(d))
                )

    def check_relations(self):
        """Every source relation maps to 0 in the target quotient."""
        from ..exact import solve_lattice

        for r in self.source.relations:
            img = self.apply(r)
            if img.is_zero():
                continue
            d = img.degree()
            vec = self.target.vector_of(img, d)
            cols = self.target.relation_columns_at(d)
            ok = False
            if cols:
                mat = [[col[i] for col in cols] for i in range(len(vec))]
                ok = solve_lattice(mat, vec) is not None
            if not ok:
                raise ValueError(
                    "relation-not-preserved: %s maps to %s"
                    % (self.source.poly_str(r), self.target.poly_str(img))
                )

    def _gen_power(self, i: int, e: int) -> PolyElement:
        key = (i, e)
        hit = self._pow_cache.get(key)
        if hit is not None:
            return hit
        gname = self.source.gens[i].name
        base = self.images.get(gname)
        if base is None:
            base = self.target.zero()
        if e == 0:
            val = self.target.one()
        elif e == 1:
            val = base
        else:
            val = self._gen_power(i, e - 1) * base
        self._pow_cache[key] = val
        return val

    def apply(self, poly) -> PolyElement:
        poly = self.source.coerce(poly)
        out = self.target.zero()
        for exps, c in poly.terms.items():
            term = self.target.one() * c
            for i, e in enumerate(exps):
                if e:
                    term = term * self._gen_power(i, e)
                    if term.is_zero():
                        break
            out = out + term
        return out

    __call__ = apply
