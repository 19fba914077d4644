"""Mod 2 comparison: injectivity on the a-divisible part of the start page.

The start page carries integer coefficients; the comparison target is an
F2 polynomial ring presented with integer coefficients and reduced mod 2
here.  The a-divisible monomials form an F2 basis of the a-ideal in each
degree (the coefficient of any a-divisible monomial is 2-torsion), so
degreewise injectivity is exactly F2 independence of their images.
"""

from __future__ import annotations

from ..graded import Degree
from .turning import degree_filters


def _f2_rank(masks):
    basis = []
    rank = 0
    for m in masks:
        for b in basis:
            m = min(m, m ^ b)
        if m:
            basis.append(m)
            basis.sort(reverse=True)
            rank += 1
    return rank


def comparison_injectivity(ring_map, window):
    src, tgt = ring_map.source, ring_map.target
    ring_map.check_degrees()
    report = {"ok": True, "witnesses": [], "degrees_checked": 0, "kills_relations": True}
    for rel in src.relations:
        img = ring_map(rel)
        if any(c % 2 for c in img.terms.values()):
            report["ok"] = False
            report["kills_relations"] = False
            report["witnesses"].append(
                {"code": "relation-not-preserved", "relation": str(rel), "image": str(img)}
            )
    a_idx = src.gen_index["a"]
    allow = degree_filters(src)
    for d in window.degrees():
        d = Degree(*d)
        if not allow(d):
            continue
        monos = [m for m in src.monomials_at(d) if m[a_idx] >= 1]
        if not monos:
            continue
        report["degrees_checked"] += 1
        tgt_index = tgt.index_at(d)
        masks = []
        for m in monos:
            img = ring_map(src.monomial(m))
            mask = 0
            for e, c in img.terms.items():
                if c % 2:
                    mask |= 1 << tgt_index[e]
            masks.append(mask)
        rank = _f2_rank(masks)
        if rank < len(monos):
            report["ok"] = False
            report["witnesses"].append(
                {
                    "code": "not-injective",
                    "degree": tuple(d),
                    "ideal_rank": len(monos),
                    "image_rank": rank,
                }
            )
    return report
