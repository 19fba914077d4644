"""The 2-local algebroid corepresenting unipotent changes of plane cubics.

Base ring A = Z(2)[a1, a3], corepresenting the family y^2 + a1xy + a3y = x^3.
Translations (s, t) preserving the family form the affine scheme with
coordinate ring Gamma = A[s, t] / (R1, R2), where R1, R2 are the conditions
that the moved curve again has a2 = a4 = a6 = 0 (the a2 condition eliminates
the x-shift r instead of imposing a relation).

Elements are kept as dicts {(p, q, i, j): Fraction} for the monomial
a1^p a3^q s^i t^j; all denominators stay odd.  Normal forms are computed per
internal degree by Gaussian elimination against the multiples of R1 and R2,
pivoting only on monomials outside the free basis {s^i t^j : i <= 3, j <= 1}.
No monomial rewriting system is used: the leading-term candidates of R1 and
R2 impose contradictory ordering constraints, so no compatible termination
order exists and elimination per degree is the honest normal form.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .curves import Curve, Transform, compose, transform_curve
from .mpoly import MPoly

GPoly = Dict[Tuple[int, int, int, int], Fraction]
BKey = Tuple[int, int]

# Internal degrees: |a1| = |s| = 2, |a3| = |t| = 6.
WEIGHTS = (2, 6, 2, 6)

BASIS: Tuple[BKey, ...] = tuple(
    (i, j) for j in (0, 1) for i in range(4)
)


class AlgebroidError(Exception):
    def __init__(self, code: str, detail: str = ""):
        self.code = code
        super().__init__(code if not detail else "%s: %s" % (code, detail))


def _wt(mono) -> int:
    return sum(w * e for w, e in zip(WEIGHTS, mono))


def gp_add(f: GPoly, g: GPoly) -> GPoly:
    out = dict(f)
    for k, c in g.items():
        v = out.get(k, Fraction(0)) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def gp_scale(f: GPoly, c) -> GPoly:
    c = Fraction(c)
    if not c:
        return {}
    return {k: v * c for k, v in f.items()}


def gp_sub(f: GPoly, g: GPoly) -> GPoly:
    return gp_add(f, gp_scale(g, -1))


def gp_mul(f: GPoly, g: GPoly) -> GPoly:
    out: GPoly = {}
    for k1, c1 in f.items():
        for k2, c2 in g.items():
            k = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3])
            v = out.get(k, Fraction(0)) + c1 * c2
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def gp_const(c) -> GPoly:
    c = Fraction(c)
    return {(0, 0, 0, 0): c} if c else {}


GP_VARS = {"a1": (1, 0, 0, 0), "a3": (0, 1, 0, 0), "s": (0, 0, 1, 0), "t": (0, 0, 0, 1)}


def gp_var(name: str) -> GPoly:
    return {GP_VARS[name]: Fraction(1)}


def gp_from_mpoly(poly: MPoly) -> GPoly:
    out: GPoly = {}
    for key, c in poly.terms.items():
        exps = {"a1": 0, "a3": 0, "s": 0, "t": 0}
        for name, e in key:
            assert name in exps, "foreign variable %s" % name
            exps[name] = e
        out[(exps["a1"], exps["a3"], exps["s"], exps["t"])] = c
    return out


def gp_to_mpoly(f: GPoly) -> MPoly:
    out = MPoly()
    names = ("a1", "a3", "s", "t")
    for k, c in f.items():
        key = tuple((n, e) for n, e in zip(names, k) if e)
        out.terms[tuple(sorted(key))] = c
    return out


def gp_str(f: GPoly) -> str:
    return str(gp_to_mpoly(f))


def gp_two_local(f: GPoly) -> bool:
    return all(c.denominator % 2 for c in f.values())


def gp_weight_split(f: GPoly) -> Dict[int, GPoly]:
    out: Dict[int, GPoly] = {}
    for k, c in f.items():
        out.setdefault(_wt(k), {})[k] = c
    return out


def monomials_at(weight: int):
    """All (p, q, i, j) of the given internal degree, in a fixed order."""
    if weight < 0 or weight % 2:
        return []
    out = []
    half = weight // 2
    for q in range(half // 3 + 1):
        for j in range((half - 3 * q) // 3 + 1):
            rest = half - 3 * q - 3 * j
            for i in range(rest + 1):
                out.append((rest - i, q, i, j))
    out.sort()
    return out


def _is_basis(mono) -> bool:
    return mono[2] <= 3 and mono[3] <= 1


class Algebroid:
    """Gamma with its structure maps, built from the curve-transformation law.

    Everything downstream (relations, eta_R, the comultiplication) is derived
    by actually moving a generic curve, not transcribed.
    """

    def __init__(self):
        a1, a3 = MPoly.var("a1"), MPoly.var("a3")
        s, t = MPoly.var("s"), MPoly.var("t")
        base = Curve.make(a1, 0, a3, 0, 0)

        # The x-shift is forced by the a2 condition, linearly.
        trial = transform_curve(base, Transform.make(MPoly.var("r"), s, t))
        by_r = trial.a2.coeff_split(("r",))
        assert set(by_r) <= {(0,), (1,)}
        r_sol = -by_r[(0,)] * MPoly.const(Fraction(1, 1)) / by_r[(1,)].terms[()]
        self.r_param = gp_from_mpoly(r_sol)

        phi = Transform.make(r_sol, s, t)
        moved = transform_curve(base, phi)
        assert moved.a2.is_zero()
        self.eta_a1 = gp_from_mpoly(moved.a1)
        self.eta_a3 = gp_from_mpoly(moved.a3)
        # Odd scalings keep the generators integral; 2-locally harmless.
        self.R1 = gp_from_mpoly(moved.a4 * 3)
        self.R2 = gp_from_mpoly(moved.a6 * 27)
        assert all(_wt(k) == 8 for k in self.R1)
        assert all(_wt(k) == 12 for k in self.R2)

        # Comultiplication from composing two generic translations.  The
        # second x-shift lives over the curve already moved by the first.
        s1, t1 = MPoly.var("s1"), MPoly.var("t1")
        s2, t2 = MPoly.var("s2"), MPoly.var("t2")
        first = Transform.make(r_sol.substitute({"s": s1, "t": t1}), s1, t1)
        mid = transform_curve(base, first)
        r2 = r_sol.substitute({"a1": mid.a1, "s": s2, "t": t2})
        total = compose(first, Transform.make(r2, s2, t2))
        want_r = r_sol.substitute({"s": s1 + s2})
        assert total.r == want_r, "composite x-shift off the a2 locus"
        assert total.s == s1 + s2
        self.delta_s = self._tensorize(total.s)
        self.delta_t = self._tensorize(total.t)

        self._ech: Dict[int, dict] = {}
        self._eta_pow: Dict[Tuple[int, int], GPoly] = {(0, 0): gp_const(1)}
        self._delta_pow: Dict[Tuple[int, int], Tensor] = {}
        self._delta_basis: Dict[BKey, "Tensor"] = {}
        self._pair_prod: Dict[Tuple[BKey, BKey], "Tensor"] = {}

    def _tensorize(self, poly: MPoly) -> "Tensor":
        """MPoly in a1, a3, s1, t1, s2, t2 -> sum of (left in Gamma) x basis."""
        slots: Dict[BKey, GPoly] = {}
        for key, c in poly.coeff_split(("s2", "t2")).items():
            assert key in set(BASIS), "right factor escaped the basis"
            left = c.substitute({"s1": MPoly.var("s"), "t1": MPoly.var("t")})
            slots[key] = gp_from_mpoly(left)
        return Tensor(self, slots)

    # -- normal form ---------------------------------------------------

    def _echelon(self, weight: int) -> dict:
        """Pivot columns over the relation span at one internal degree.

        Returns {pivot monomial: column}, each column a GPoly with pivot
        entry 1 and, after back-substitution, no other pivot monomial.
        """
        if weight in self._ech:
            return self._ech[weight]
        cols = []
        for rel, w in ((self.R1, 8), (self.R2, 12)):
            for m in monomials_at(weight - w):
                cols.append(gp_mul({m: Fraction(1)}, rel))
        # Invariant: every stored pivot column has pivot entry 1 and no
        # other pivot monomial in its support, so reducing a column takes
        # at most one subtraction per pivot.
        pivots: Dict[Tuple[int, int, int, int], GPoly] = {}
        for col in cols:
            col = dict(col)
            while True:
                hit = next((m for m in sorted(col) if m in pivots), None)
                if hit is None:
                    break
                col = gp_sub(col, gp_scale(pivots[hit], col[hit]))
            if not col:
                continue
            pick = None
            for mono in sorted(col):
                if not _is_basis(mono) and col[mono].numerator % 2:
                    pick = mono
                    break
            if pick is None:
                if all(_is_basis(m) for m in col):
                    raise AlgebroidError(
                        "basis-rank-failure",
                        "degree %d column %s" % (weight, gp_str(col)),
                    )
                raise AlgebroidError(
                    "elimination-failure",
                    "degree %d: no 2-locally invertible pivot in %s"
                    % (weight, gp_str(col)),
                )
            col = gp_scale(col, 1 / col[pick])
            for q, qcol in list(pivots.items()):
                if pick in qcol:
                    pivots[q] = gp_sub(qcol, gp_scale(col, qcol[pick]))
            pivots[pick] = col
        self._ech[weight] = pivots
        return pivots

    def nonbasis_covered(self, weight: int):
        """(missing, total) pivot coverage of non-basis monomials."""
        pivots = self._echelon(weight)
        missing = [
            m for m in monomials_at(weight)
            if not _is_basis(m) and m not in pivots
        ]
        total = sum(1 for m in monomials_at(weight) if not _is_basis(m))
        return missing, total

    def nf(self, f: GPoly) -> GPoly:
        out: GPoly = {}
        for weight, part in gp_weight_split(f).items():
            pivots = self._echelon(weight)
            part = dict(part)
            # Pivot columns carry no other pivots, so one pass per hit.
            while True:
                hit = next((m for m in sorted(part) if m in pivots), None)
                if hit is None:
                    break
                part = gp_sub(part, gp_scale(pivots[hit], part[hit]))
            for mono, c in part.items():
                if not _is_basis(mono):
                    raise AlgebroidError(
                        "elimination-failure",
                        "degree %d monomial %s has no pivot" % (weight, gp_str({mono: c})),
                    )
                out[mono] = c
        return out

    def mul_nf(self, f: GPoly, g: GPoly) -> GPoly:
        return self.nf(gp_mul(f, g))

    # -- structure maps ------------------------------------------------

    def eps(self, f: GPoly) -> GPoly:
        return {k: c for k, c in f.items() if k[2] == 0 and k[3] == 0}

    def _eta_monomial(self, p: int, q: int) -> GPoly:
        key = (p, q)
        if key not in self._eta_pow:
            if p:
                prev = self._eta_monomial(p - 1, q)
                self._eta_pow[key] = self.nf(gp_mul(prev, self.eta_a1))
            else:
                prev = self._eta_monomial(p, q - 1)
                self._eta_pow[key] = self.nf(gp_mul(prev, self.eta_a3))
        return self._eta_pow[key]

    def eta_R(self, f: GPoly) -> GPoly:
        """Right unit on an element of A (no s, t allowed)."""
        out: GPoly = {}
        for (p, q, i, j), c in f.items():
            assert i == 0 and j == 0, "eta_R takes base-ring input"
            out = gp_add(out, gp_scale(self._eta_monomial(p, q), c))
        return out

    def _subst(self, f: GPoly, images: dict) -> GPoly:
        out: GPoly = {}
        powers = {name: {0: gp_const(1)} for name in images}
        for (p, q, i, j), c in f.items():
            term = gp_const(c)
            for name, e in (("a1", p), ("a3", q), ("s", i), ("t", j)):
                if not e:
                    continue
                cache = powers[name]
                while len(cache) <= e:
                    n = len(cache)
                    cache[n] = gp_mul(cache[n - 1], images[name])
                term = gp_mul(term, cache[e])
            out = gp_add(out, term)
        return out

    def gamma(self, f: GPoly) -> GPoly:
        """A-algebra involution induced by the hyperelliptic flip."""
        a1, s = gp_var("a1"), gp_var("s")
        g_s = gp_scale(gp_add(s, a1), -1)
        g_t = gp_sub(
            gp_scale(gp_var("t"), -1),
            gp_add(gp_var("a3"), gp_scale(gp_mul(a1, gp_add(gp_mul(s, s), gp_mul(a1, s))), Fraction(1, 3))),
        )
        images = {"a1": a1, "a3": gp_var("a3"), "s": g_s, "t": g_t}
        return self.nf(self._subst(f, images))

    def antipode(self, f: GPoly) -> GPoly:
        """Ring involution swapping the two units; corepresents inversion."""
        s = gp_var("s")
        c_t = gp_sub(
            gp_scale(gp_mul(gp_mul(s, s), gp_add(s, gp_var("a1"))), Fraction(1, 3)),
            gp_var("t"),
        )
        images = {
            "a1": self.eta_a1,
            "a3": self.eta_a3,
            "s": gp_scale(s, -1),
            "t": c_t,
        }
        return self.nf(self._subst(f, images))

    def res_tr(self, f: GPoly) -> GPoly:
        """Composite of the transfer with restriction: x + gamma(x)."""
        return self.nf(gp_add(f, self.gamma(f)))

    # -- tensor layer ----------------------------------------------------

    def transport_right(self, f: GPoly) -> "Tensor":
        """Rewrite 1 (x) f with all A-coefficients moved across the tensor."""
        slots: Dict[BKey, GPoly] = {}
        for (p, q, i, j), c in self.nf(f).items():
            left = gp_scale(self._eta_monomial(p, q), c)
            key = (i, j)
            slots[key] = gp_add(slots.get(key, {}), left)
        return Tensor(self, {k: v for k, v in slots.items() if v})

    def pair_product(self, b1: BKey, b2: BKey) -> "Tensor":
        key = (b1, b2)
        if key not in self._pair_prod:
            prod = {(0, 0, b1[0] + b2[0], b1[1] + b2[1]): Fraction(1)}
            self._pair_prod[key] = self.transport_right(prod)
        return self._pair_prod[key]

    def delta_power(self, i: int, j: int) -> "Tensor":
        key = (i, j)
        if key not in self._delta_pow:
            if (i, j) == (0, 0):
                self._delta_pow[key] = Tensor(self, {(0, 0): gp_const(1)})
            elif i:
                self._delta_pow[key] = self.delta_power(i - 1, j).mul(self.delta_s)
            else:
                self._delta_pow[key] = self.delta_power(0, j - 1).mul(self.delta_t)
        return self._delta_pow[key]

    def delta(self, f: GPoly) -> "Tensor":
        """Comultiplication, a map Gamma -> Gamma (x)_A Gamma."""
        out = Tensor(self, {})
        for (p, q, i, j), c in self.nf(f).items():
            part = self.delta_power(i, j).scale_left({(p, q, 0, 0): c})
            out = out.add(part)
        return out

    def delta_basis(self, b: BKey) -> "Tensor":
        if b not in self._delta_basis:
            self._delta_basis[b] = self.delta({(0, 0, b[0], b[1]): Fraction(1)})
        return self._delta_basis[b]


class Tensor:
    """Element of Gamma (x)_A Gamma in left normal form.

    slots maps a right basis monomial (i, j) to its left coefficient, a
    Gamma element in normal form.  The balancing rule x (x) a y = x eta_R(a)
    (x) y is applied whenever content crosses the tensor sign.
    """

    __slots__ = ("alg", "slots")

    def __init__(self, alg: Algebroid, slots: Dict[BKey, GPoly]):
        self.alg = alg
        self.slots = {k: v for k, v in slots.items() if v}

    def add(self, other: "Tensor") -> "Tensor":
        out = dict(self.slots)
        for k, v in other.slots.items():
            out[k] = gp_add(out.get(k, {}), v)
        return Tensor(self.alg, out)

    def sub(self, other: "Tensor") -> "Tensor":
        return self.add(other.scale(-1))

    def scale(self, c) -> "Tensor":
        return Tensor(self.alg, {k: gp_scale(v, c) for k, v in self.slots.items()})

    def scale_left(self, g: GPoly) -> "Tensor":
        return Tensor(
            self.alg, {k: self.alg.mul_nf(g, v) for k, v in self.slots.items()}
        )

    def mul(self, other: "Tensor") -> "Tensor":
        alg = self.alg
        out = Tensor(alg, {})
        for b1, g1 in self.slots.items():
            for b2, g2 in other.slots.items():
                base = alg.pair_product(b1, b2)
                left = alg.mul_nf(g1, g2)
                out = out.add(base.scale_left(left))
        return out

    def is_zero(self) -> bool:
        return not self.slots

    def eq(self, other: "Tensor") -> bool:
        return self.sub(other).is_zero()

    def counit_left(self) -> GPoly:
        """(eps (x) id): lands back in Gamma."""
        out: GPoly = {}
        for (i, j), g in self.slots.items():
            out = gp_add(out, gp_mul(self.alg.eps(g), {(0, 0, i, j): Fraction(1)}))
        return self.alg.nf(out)

    def counit_right(self) -> GPoly:
        """(id (x) eps): only the (0, 0) slot survives."""
        return self.alg.nf(dict(self.slots.get((0, 0), {})))

    def mul_antipode_right(self) -> GPoly:
        """mu (id (x) c) applied to this expansion of Delta(x)."""
        out: GPoly = {}
        for (i, j), g in self.slots.items():
            c_b = self.alg.antipode({(0, 0, i, j): Fraction(1)})
            out = gp_add(out, gp_mul(g, c_b))
        return self.alg.nf(out)

    def mul_antipode_left(self) -> GPoly:
        """mu (c (x) id) applied to this expansion of Delta(x)."""
        out: GPoly = {}
        for (i, j), g in self.slots.items():
            out = gp_add(out, gp_mul(self.alg.antipode(g), {(0, 0, i, j): Fraction(1)}))
        return self.alg.nf(out)

    def coassoc_left(self) -> "Triple":
        """(Delta (x) id)."""
        out: Dict[Tuple[BKey, BKey], GPoly] = {}
        for b_r, g in self.slots.items():
            for b_m, h in self.alg.delta(g).slots.items():
                key = (b_m, b_r)
                out[key] = gp_add(out.get(key, {}), h)
        return Triple(self.alg, out)

    def coassoc_right(self) -> "Triple":
        """(id (x) Delta); middle-slot A-content migrates left via eta_R."""
        alg = self.alg
        out: Dict[Tuple[BKey, BKey], GPoly] = {}
        for b, g in self.slots.items():
            for c, h in alg.delta_basis(b).slots.items():
                for (p, q, i, j), coeff in h.items():
                    left = alg.mul_nf(g, gp_scale(alg._eta_monomial(p, q), coeff))
                    key = ((i, j), c)
                    out[key] = gp_add(out.get(key, {}), left)
        return Triple(alg, out)

    def describe(self) -> str:
        if not self.slots:
            return "0"
        parts = []
        for (i, j) in sorted(self.slots):
            right = gp_str({(0, 0, i, j): Fraction(1)})
            parts.append("(%s) (x) %s" % (gp_str(self.slots[(i, j)]), right))
        return " + ".join(parts)


class Triple:
    """Element of Gamma (x) Gamma (x) Gamma, left normal form in each slot."""

    __slots__ = ("alg", "slots")

    def __init__(self, alg: Algebroid, slots):
        self.slots = {k: v for k, v in slots.items() if v}
        self.alg = alg

    def eq(self, other: "Triple") -> bool:
        keys = set(self.slots) | set(other.slots)
        for k in keys:
            if gp_sub(self.slots.get(k, {}), other.slots.get(k, {})):
                return False
        return True


def _random_element(alg: Algebroid, rng, max_weight: int) -> GPoly:
    out: GPoly = {}
    for _ in range(rng.randrange(2, 6)):
        w = 2 * rng.randrange(1, max_weight // 2 + 1)
        monos = monomials_at(w)
        mono = monos[rng.randrange(len(monos))]
        c = rng.randrange(-9, 10)
        if c:
            out = gp_add(out, {mono: Fraction(c)})
    return alg.nf(out)


def hopf_axiom_check(alg: Algebroid, maxdeg: int = 30, seed: int = 5,
                     trials: int = 8) -> dict:
    """Structural axiom battery, exact through the given internal degree.

    Covers freeness of the cover ring over the basis, counit and
    coassociativity laws, both antipode composition laws, involutivity,
    compatibility of the antipode with the right unit, vanishing of the
    diagonal on both defining relations, and multiplicativity of every
    structure map on seeded random elements.  Returns a dict with "ok",
    "witnesses" (failing law + element), "freeness" and "counts".
    """
    import random

    rng = random.Random(seed)
    witnesses = []
    counts = {"laws": 0, "random_products": 0}

    def law(name: str, cond: bool, detail: str = ""):
        counts["laws"] += 1
        if not cond:
            witnesses.append({"law": name, "detail": detail})

    missing_total = 0
    monos_total = 0
    for w in range(2, maxdeg + 1, 2):
        missing, total = alg.nonbasis_covered(w)
        missing_total += len(missing)
        monos_total += total
        law("freeness@%d" % w, not missing,
            "%d uncovered of %d" % (len(missing), total))

    one = gp_const(1)
    for b in BASIS:
        x: GPoly = {(0, 0, b[0], b[1]): Fraction(1)}
        dx = alg.delta_basis(b)
        law("counit-left", gp_sub(dx.counit_left(), x) == {}, gp_str(x))
        law("counit-right", gp_sub(dx.counit_right(), x) == {}, gp_str(x))
        law("coassoc", dx.coassoc_left().eq(dx.coassoc_right()), gp_str(x))
        unit_part = one if b == (0, 0) else {}
        law("antipode-right", gp_sub(dx.mul_antipode_right(), unit_part) == {},
            gp_str(x))
        law("antipode-left", gp_sub(dx.mul_antipode_left(), unit_part) == {},
            gp_str(x))
        law("antipode-involutive", gp_sub(alg.antipode(alg.antipode(x)), x) == {},
            gp_str(x))
        law("flip-involutive", gp_sub(alg.gamma(alg.gamma(x)), x) == {}, gp_str(x))

    for a in (gp_var("a1"), gp_var("a3")):
        law("antipode-right-unit", gp_sub(alg.antipode(alg.eta_R(a)), a) == {},
            gp_str(a))

    law("diagonal-kills-R1", alg.delta(alg.R1).is_zero(), "R1")
    law("diagonal-kills-R2", alg.delta(alg.R2).is_zero(), "R2")
    law("R1-normal-form", alg.nf(alg.R1) == {}, "R1")
    law("R2-normal-form", alg.nf(alg.R2) == {}, "R2")

    for _ in range(trials):
        x = _random_element(alg, rng, 12)
        y = _random_element(alg, rng, 12)
        counts["random_products"] += 1
        xy = alg.mul_nf(x, y)
        sx = gp_str(x)
        law("diagonal-multiplicative",
            alg.delta(xy).eq(alg.delta(x).mul(alg.delta(y))), sx)
        law("counit-multiplicative",
            gp_sub(alg.eps(xy), gp_mul(alg.eps(x), alg.eps(y))) == {}, sx)
        law("antipode-multiplicative",
            gp_sub(alg.antipode(xy),
                   alg.mul_nf(alg.antipode(x), alg.antipode(y))) == {}, sx)
        law("flip-multiplicative",
            gp_sub(alg.gamma(xy), alg.mul_nf(alg.gamma(x), alg.gamma(y))) == {},
            sx)
        law("reciprocity",
            gp_sub(alg.res_tr(alg.mul_nf(x, alg.res_tr(y))),
                   alg.mul_nf(alg.res_tr(x), alg.res_tr(y))) == {}, sx)
        dx = alg.delta(x)
        law("counit-left-random", gp_sub(dx.counit_left(), x) == {}, sx)
        law("counit-right-random", gp_sub(dx.counit_right(), x) == {}, sx)

    for _ in range(max(2, trials // 2)):
        x = _random_element(alg, rng, 10)
        dx = alg.delta(x)
        law("coassoc-random", dx.coassoc_left().eq(dx.coassoc_right()), gp_str(x))

    return {
        "ok": not witnesses,
        "witnesses": witnesses,
        "freeness": {"missing": missing_total, "monomials": monos_total},
        "counts": counts,
    }
