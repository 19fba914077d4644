"""Mod-2 shadow of the two-sided object and the relative comparison map.

Over F2 the base curve degenerates to the cusp y^2 = x^3, whose translation
parameters (u, v) generate a truncated polynomial ring F2[u, v]/(u^4, v^2);
the second tensor factor contributes zeta-parameters z1, z2 with the same
shape of truncation.  The comparison map h sends the algebroid parameters
(s, t) into that ring; the transfer then hits a fixed table of epsilon
classes.  Everything here is derived from the same curve-moving primitives
as the integral layer, reduced mod (2, a1, a3).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .curves import Curve, Transform, compose, transform_curve
from .mpoly import MPoly

# Exponent caps: u^4 = v^2 = z1^4 = z2^2 = 0.
CAPS = (4, 2, 4, 2)
_NAMES = ("u", "v", "z1", "z2")


class TruncF2:
    """F2[u, v, z1, z2] modulo the truncations, as a set of monomials."""

    __slots__ = ("monos",)

    def __init__(self, monos=()):
        self.monos = frozenset(m for m in monos if all(e < c for e, c in zip(m, CAPS)))

    @staticmethod
    def var(name: str) -> "TruncF2":
        mono = tuple(1 if n == name else 0 for n in _NAMES)
        return TruncF2([mono])

    @staticmethod
    def one() -> "TruncF2":
        return TruncF2([(0, 0, 0, 0)])

    def __add__(self, other: "TruncF2") -> "TruncF2":
        return TruncF2(self.monos ^ other.monos)

    def __mul__(self, other: "TruncF2") -> "TruncF2":
        out = set()
        for m1 in self.monos:
            for m2 in other.monos:
                m = tuple(a + b for a, b in zip(m1, m2))
                if any(e >= c for e, c in zip(m, CAPS)):
                    continue
                out ^= {m}
        return TruncF2(out)

    def __pow__(self, e: int) -> "TruncF2":
        out = TruncF2.one()
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not self.monos

    def __eq__(self, other):
        return isinstance(other, TruncF2) and self.monos == other.monos

    def __hash__(self):
        return hash(self.monos)

    def __str__(self):
        if not self.monos:
            return "0"
        parts = []
        for m in sorted(self.monos):
            body = "*".join(
                n if e == 1 else "%s^%d" % (n, e)
                for n, e in zip(_NAMES, m) if e
            )
            parts.append(body or "1")
        return " + ".join(parts)


def _f2_of_mpoly(poly: MPoly, images: Dict[str, TruncF2]) -> TruncF2:
    """Evaluate an MPoly in TruncF2; a1, a3 go to zero, odd denominators to 1."""
    out = TruncF2()
    for key, c in poly.terms.items():
        assert c.denominator % 2, "even denominator in mod-2 reduction"
        if c.numerator % 2 == 0:
            continue
        term = TruncF2.one()
        for name, e in key:
            if name in ("a1", "a3"):
                term = TruncF2()
                break
            term = term * images[name] ** e
        out = out + term
    return out


def derive_maps() -> dict:
    """Rebuild the comparison data by moving the cusp.

    Returns the composite parameters and the two ring maps: dual_phi (on the
    zeta side, before inversion) and h (the comparison map itself).
    """
    u, v, r = MPoly.var("u"), MPoly.var("v"), MPoly.var("r")
    s, t = MPoly.var("s"), MPoly.var("t")
    cusp = Curve.make(0, 0, 0, 0, 0)

    trial = transform_curve(cusp, Transform.make(r, u, v))
    by_r = trial.a2.coeff_split(("r",))
    r_uv = -by_r[(0,)] / by_r[(1,)].terms[()]
    assert r_uv == u * u / 3
    phi_uv = Transform.make(r_uv, u, v)
    mid = transform_curve(cusp, phi_uv)

    # Second translation lives over the moved cusp, with its own forced r.
    gen = transform_curve(mid, Transform.make(MPoly.var("r2"), s, t))
    by_r2 = gen.a2.coeff_split(("r2",))
    r_st = -by_r2[(0,)] / by_r2[(1,)].terms[()]
    total = compose(phi_uv, Transform.make(r_st, s, t))
    assert total.s == u + s

    # The zeta parameters are the composite's parameters.
    dual_phi = {
        "u": MPoly.var("u"),
        "v": MPoly.var("v"),
        "z1": total.s,
        "z2": total.t,
    }
    return {"phi_uv": phi_uv, "composite": total, "dual_phi": dual_phi}


def h_images() -> Tuple[TruncF2, TruncF2]:
    """The comparison map on s and t, derived by inverting the composite.

    From z1 = u + s and z2 = (composite t) - v - t mod (2, a1, a3) one gets
    s = u + z1 and t = z2 + v + u s^2 with s replaced by its own image.
    """
    data = derive_maps()
    uu, vv = TruncF2.var("u"), TruncF2.var("v")
    z1, z2 = TruncF2.var("z1"), TruncF2.var("z2")
    h_s = uu + z1

    # composite t = v + t + (u-shift terms); mod 2 the shift is u*s^2.
    shift = data["composite"].t - MPoly.var("v") - MPoly.var("t")
    shift_f2 = _f2_of_mpoly(shift, {"u": uu, "v": vv, "s": h_s, "t": TruncF2()})
    h_t = z2 + vv + shift_f2
    return h_s, h_t


# Nonzero transfers out of the zeta part, by (z1 exponent, z2 exponent).
TRANSFER = {
    (2, 0): "eps4",
    (3, 0): "eps6",
    (0, 1): "eps6",
    (1, 1): "eps8",
    (2, 1): "eps10",
    (3, 1): "eps12",
}


def transfer_shadow(x: TruncF2) -> Dict[str, TruncF2]:
    """Apply the transfer table F2[u, v]-linearly; drop everything else."""
    out: Dict[str, set] = {}
    for (eu, ev, e1, e2) in x.monos:
        label = TRANSFER.get((e1, e2))
        if label is None:
            continue
        out.setdefault(label, set())
        out[label] ^= {(eu, ev, 0, 0)}
    return {k: TruncF2(v) for k, v in out.items() if v}


def hurewicz_check(alg) -> dict:
    """End-to-end check of the comparison map and the six transfer values."""
    from .algebroid import gp_to_mpoly

    report = {"ok": True, "witnesses": [], "images": {}, "transfers": {}}
    data = derive_maps()
    tot = data["composite"]
    report["composite"] = {"s": str(tot.s), "t": str(tot.t)}

    h_s, h_t = h_images()
    report["images"]["s"] = str(h_s)
    report["images"]["t"] = str(h_t)
    images = {"u": TruncF2.var("u"), "v": TruncF2.var("v"), "s": h_s, "t": h_t}

    # Well-defined: both relations must die mod 2 under the truncations.
    for name, rel in (("R1", alg.R1), ("R2", alg.R2)):
        val = _f2_of_mpoly(gp_to_mpoly(rel), images)
        if not val.is_zero():
            report["ok"] = False
            report["witnesses"].append(
                {"code": "relation-not-preserved", "relation": name,
                 "value": str(val)}
            )

    # The six monomials must have nonzero transferred shadow.
    s_img, t_img = h_s, h_t
    checks = [
        ("s^2", s_img * s_img),
        ("s^3", s_img * s_img * s_img),
        ("t", t_img),
        ("st", s_img * t_img),
        ("s^2t", s_img * s_img * t_img),
        ("s^3t", s_img * s_img * s_img * t_img),
    ]
    for name, val in checks:
        shadow = transfer_shadow(val)
        report["transfers"][name] = {k: str(v) for k, v in sorted(shadow.items())}
        if not shadow:
            report["ok"] = False
            report["witnesses"].append(
                {"code": "target-not-cycle", "monomial": name,
                 "detail": "transfer shadow vanishes"}
            )
    return report
