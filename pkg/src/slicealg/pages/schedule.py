"""Page presentations and differential tables for the slice computation.

Every builder takes the height n (how many v generators) and max_c, the
largest c-degree a generator may have and still matter inside the scan
window.  Polynomial generators t_i with c above the cut are dropped; this
never changes any group inside a window with max_underlying + max_w below
the cut.
"""

from __future__ import annotations

from ..graded import Degree, RingPresentation, RingMap

# the infinite t-family: t_i sits in (2(2^i - 1), 0, -2(2^i - 1))
MAX_T_INDEX = 6


def _t_gens(max_c, start=1):
    out = []
    for i in range(start, MAX_T_INDEX + 1):
        c = 2 * (2**i - 1)
        if c <= max_c:
            out.append(("t%d" % i, (c, 0, -c)))
    return out


def _v_gens(height):
    return [("v%d" % i, (2**i - 1, 2**i - 1, 0)) for i in range(1, height + 1)]


def start_page(height: int, max_c: int) -> RingPresentation:
    """The multiplicative start page: Z[a, u, v_i, t_i] / (2a)."""
    gens = [("a", (0, -1, 1)), ("u", (2, -2, 0))] + _v_gens(height) + _t_gens(max_c)
    raw = RingPresentation(gens, name="E2-raw")
    return RingPresentation(gens, [2 * raw.gen("a")], name="E2(n=%d)" % height)


def d3_table(e2: RingPresentation) -> dict:
    """First differential: u and t1 hit the a-tower on v1."""
    a, v1 = e2.gen("a"), e2.gen("v1")
    table = {"u": a**3 * v1, "t1": a * v1}
    return {k: v for k, v in table.items() if k in e2.gen_index}


def fourth_page(height: int, max_c: int) -> RingPresentation:
    """Model presentation of the page after the first turn.

    w replaces u, m1 is the class [2*t1], t1sq the class t1^2.
    """
    gens = [
        ("a", (0, -1, 1)),
        ("w", (2, -2, 0)),
        ("m1", (2, 0, -2)),
        ("t1sq", (4, 0, -4)),
    ] + _v_gens(height) + _t_gens(max_c, start=2)
    raw = RingPresentation(gens, name="E4-raw")
    a, m1, t1sq = raw.gen("a"), raw.gen("m1"), raw.gen("t1sq")
    rels = [2 * a, a * raw.gen("v1"), a * m1, m1 * m1 - 4 * t1sq]
    return RingPresentation(gens, rels, name="E4(n=%d)" % height)


def fourth_page_map(e4: RingPresentation, e2: RingPresentation) -> RingMap:
    """Realize the model generators as chain level elements of the start page."""
    a, u, t1 = e2.gen("a"), e2.gen("u"), e2.gen("t1")
    fixed = {
        "a": a,
        "w": u - a * a * t1,
        "m1": 2 * t1,
        "t1sq": t1 * t1,
    }
    images = {}
    for g in e4.gens:
        if g.name in fixed:
            images[g.name] = fixed[g.name]
        elif g.name in e2.gen_index:
            images[g.name] = e2.gen(g.name)
    return RingMap(e4, e2, images, name="fourth-page")


def d7_table(e4: RingPresentation) -> dict:
    """Second differential: t1sq and t2 hit the v2 family.  Empty at height 1."""
    if "v2" not in e4.gen_index:
        return {}
    a, w, v2 = e4.gen("a"), e4.gen("w"), e4.gen("v2")
    table = {}
    if "t1sq" in e4.gen_index:
        table["t1sq"] = a**3 * v2
    if "t2" in e4.gen_index:
        table["t2"] = a * w * v2
    return table


def height_one_integer(max_c: int) -> RingPresentation:
    """Integer part model at height 1: Z[Delta, m1, t1sq, t2, ...]/(m1^2 - 4 t1sq)."""
    gens = [
        ("Delta", (4, 0, 0)),
        ("m1", (2, 0, -2)),
        ("t1sq", (4, 0, -4)),
    ] + _t_gens(max_c, start=2)
    raw = RingPresentation(gens, name="ko-raw")
    rel = raw.gen("m1") ** 2 - 4 * raw.gen("t1sq")
    return RingPresentation(gens, [rel], name="ko-integer")


def height_one_integer_map(model: RingPresentation, e4: RingPresentation) -> RingMap:
    w, v1 = e4.gen("w"), e4.gen("v1")
    images = {"Delta": w * v1 * v1, "m1": e4.gen("m1"), "t1sq": e4.gen("t1sq")}
    for g in model.gens:
        if g.name.startswith("t") and g.name != "t1sq" and g.name in e4.gen_index:
            images[g.name] = e4.gen(g.name)
    return RingMap(model, e4, images, name="ko-integer-part")


def hilbert_ring(max_c: int) -> RingPresentation:
    """Free bookkeeping ring whose monomial count the height 1 page must match."""
    gens = [("b", (2, 0, -2)), ("c", (4, 0, 0))] + _t_gens(max_c, start=2)
    return RingPresentation(gens, name="hilbert")


def comparison_target(height: int, max_c: int) -> RingPresentation:
    """Mod 2 comparison codomain: a, x1, v_i and the squared zeta family.

    Coefficients stay integral here; the comparison reduces matrices mod 2.
    """
    gens = [("a", (0, -1, 1)), ("x1", (1, -1, 0))] + _v_gens(height)
    gens.append(("z1sq", (2, 0, -2)))
    for j in range(2, MAX_T_INDEX + 1):
        c = 2**j - 1
        if 2 * c <= max_c or c <= max_c:
            gens.append(("z%d" % j, (c, 0, -c)))
    return RingPresentation(gens, name="HF2-target(n=%d)" % height)


def comparison_map(e2: RingPresentation, target: RingPresentation) -> RingMap:
    a, x1, z1sq = target.gen("a"), target.gen("x1"), target.gen("z1sq")
    images = {"a": a, "u": x1 * x1 + a * a * z1sq, "t1": z1sq}
    for g in e2.gens:
        if g.name.startswith("v") and g.name in target.gen_index:
            images[g.name] = target.gen(g.name)
        elif g.name.startswith("t") and g.name != "t1":
            j = g.name[1:]
            if "z" + j in target.gen_index:
                images[g.name] = target.gen("z" + j) ** 2
    return RingMap(e2, target, images, name="truncation-comparison")


def eighth_page_classes(e4: RingPresentation) -> list:
    """Named algebra generators of the page after the second turn.

    Each entry is (label, element of the fourth page model).  Labels in
    brackets denote classes represented by the bracketed chain level value.
    """
    g = e4.gen
    out = [("a", g("a")), ("w", g("w"))]
    for gen in e4.gens:
        if gen.name.startswith("v"):
            out.append((gen.name, g(gen.name)))
    t1sq = g("t1sq")
    out.append(("t1^4", t1sq * t1sq))
    if "t2" in e4.gen_index:
        t2 = g("t2")
        out.append(("t2^2", t2 * t2))
    for gen in e4.gens:
        if gen.name.startswith("t") and gen.name not in ("t1sq", "t2"):
            out.append((gen.name, g(gen.name)))
    a, w, m1 = g("a"), g("w"), g("m1")
    if "t2" in e4.gen_index:
        out.append(("[w*t1^2+a^2*t2]", w * t1sq + a * a * g("t2")))
    out.append(("[2t1]", m1))
    if "t2" in e4.gen_index:
        t2 = g("t2")
        out.append(("[2t2]", 2 * t2))
    out.append(("[2t1^2]", 2 * t1sq))
    if "t2" in e4.gen_index:
        out.append(("[2t1^2t2]", 2 * t1sq * t2))
    out.append(("[2t1^3]", m1 * t1sq))
    if "t2" in e4.gen_index:
        out.append(("[2t1t2]", m1 * t2))
        out.append(("[2t1^3t2]", m1 * t1sq * t2))
    v1 = g("v1")
    out.append(("[v1t1^2]", v1 * t1sq))
    if "t2" in e4.gen_index:
        out.append(("[v1t2]", v1 * t2))
        out.append(("[v1t1^2t2]", v1 * t1sq * t2))
    return out
