"""Page engine: differentials, page turning, survival, comparison."""

import pytest

from slicealg.graded import Degree, Window, RingPresentation
from slicealg.pages import (
    start_page,
    fourth_page,
    fourth_page_map,
    d3_table,
    d7_table,
    height_one_integer,
    height_one_integer_map,
    hilbert_ring,
    comparison_target,
    comparison_map,
    eighth_page_classes,
    DifferentialTable,
    page_at,
    degree_filters,
    verify_degreewise_iso,
    survival_certificate,
    evenness_and_torsion,
    collapse_certificate,
    generation_check,
    comparison_injectivity,
)
from slicealg.pages.survival import MarkerRules


def test_degree_filters_prove_emptiness():
    e2 = start_page(2, 14)
    allow = degree_filters(e2)
    # c + w + s and c - w - s are nonnegative on all generators
    assert not allow(Degree(10, 0, -11))
    assert not allow(Degree(8, 0, 9))
    # the c - w - s values are all divisible by 4
    assert not allow(Degree(10, 0, -4))
    assert allow(Degree(2, 0, -2))
    for d in [Degree(10, 0, -11), Degree(8, 0, 9), Degree(10, 0, -4)]:
        assert e2.monomials_at(d) == ()


def test_d3_degree_audit():
    e2 = start_page(2, 14)
    d3 = DifferentialTable(e2, 3, d3_table(e2))
    d3.degree_audit()
    bad = DifferentialTable(e2, 3, {"u": e2.gen("a") * e2.gen("v1")})
    with pytest.raises(ValueError, match="degree-audit-failed"):
        bad.degree_audit()


def test_leibniz_on_even_generators():
    e2 = start_page(2, 14)
    d3 = DifferentialTable(e2, 3, d3_table(e2))
    a, u, v1, t1 = e2.gen("a"), e2.gen("u"), e2.gen("v1"), e2.gen("t1")
    assert d3.apply(u * t1) == a**3 * v1 * t1 + u * a * v1
    assert d3.apply(t1**2) == 2 * t1 * a * v1
    assert d3.apply(a**4 * u) == a**7 * v1
    assert d3.apply(v1 * v1).is_zero()


def test_koszul_sign_on_odd_generator():
    # x odd, y and z even; d(x) = y, d(z) = x*y
    pres = RingPresentation([("x", (1, 0, 1)), ("y", (0, 0, 2)), ("z", (2, 0, 2))])
    x, y, z = pres.gen("x"), pres.gen("y"), pres.gen("z")
    d = DifferentialTable(pres, 1, {"x": y, "z": x * y})
    d.degree_audit()
    # odd generator squares: paired Leibniz terms cancel
    assert d.apply(x * x).is_zero()
    assert d.apply(x * z) == y * z - x * x * y
    assert d.apply(x**3) == x**2 * y


def test_d_squared_audit_start_page():
    e2 = start_page(2, 14)
    d3 = DifferentialTable(e2, 3, d3_table(e2))
    degrees = [d for d in Window(10, 4, 12).degrees()]
    assert d3.d_squared_witnesses(degrees) == []


def test_page_groups_after_first_turn():
    e2 = start_page(2, 14)
    d3 = DifferentialTable(e2, 3, d3_table(e2))
    # the class [2t1] generates a free summand in (2, 0, -2)
    pg = page_at(e2, d3, Degree(2, 0, -2))
    assert pg.group.invariants() == (1, ())
    assert pg.names == ["[2*t1]"]
    # a*v1 = d3(t1) dies
    pg = page_at(e2, d3, Degree(1, 0, 1))
    assert pg.group.is_zero()
    # a^3*v1 = d3(u) dies; this degree is the deleted-differential witness
    pg = page_at(e2, d3, Degree(1, -2, 3))
    assert pg.group.is_zero()


def test_fourth_page_iso_small_window():
    e2 = start_page(2, 18)
    e4 = fourth_page(2, 18)
    d3 = DifferentialTable(e2, 3, d3_table(e2))
    chain_map = fourth_page_map(e4, e2)
    chain_map.check_degrees()
    window = Window(12, 6, 16)
    allow_m = degree_filters(e4)
    allow_c = degree_filters(e2)
    degrees = [d for d in window.degrees() if allow_m(d) or allow_c(d)]
    rep = verify_degreewise_iso(e4, chain_map, lambda d: page_at(e2, d3, d), degrees)
    assert rep["ok"], rep["witnesses"][:3]
    assert rep["degrees_nonzero"] > 40


def test_fourth_page_iso_negative_controls():
    e2 = start_page(2, 18)
    e4 = fourth_page(2, 18)
    chain_map = fourth_page_map(e4, e2)
    # deleting d3(u): w maps to u - a^2*t1, which is no longer a cycle.
    # The obstruction -a^3*v1 lives one stem down at (1, -2, 3).
    broken = DifferentialTable(e2, 3, {"t1": e2.gen("a") * e2.gen("v1")})
    rep = verify_degreewise_iso(
        e4,
        chain_map,
        lambda d: page_at(e2, broken, d),
        [Degree(2, -2, 0)],
        obstruction_shift=broken.shift,
    )
    assert not rep["ok"]
    assert rep["witnesses"][0]["code"] == "target-not-cycle"
    assert rep["witnesses"][0]["monomial"] == "w"
    assert rep["witnesses"][0]["witness_degree"] == (1, -2, 3)

    d3 = DifferentialTable(e2, 3, d3_table(e2))
    # dropping the relation m1^2 - 4 t1sq inflates the model at (4, 0, -4)
    gens = [(g.name, tuple(g.degree)) for g in e4.gens]
    raw = RingPresentation(gens)
    norel = RingPresentation(
        gens, [2 * raw.gen("a"), raw.gen("a") * raw.gen("v1"), raw.gen("a") * raw.gen("m1")]
    )
    rep = verify_degreewise_iso(
        norel,
        fourth_page_map(norel, e2),
        lambda d: page_at(e2, d3, d),
        [Degree(4, 0, -4)],
    )
    assert not rep["ok"] and rep["witnesses"][0]["code"] == "group-mismatch"

    # removing the generator m1 empties the model at (2, 0, -2)
    gens_nom1 = [(g.name, tuple(g.degree)) for g in e4.gens if g.name != "m1"]
    raw = RingPresentation(gens_nom1)
    nom1 = RingPresentation(gens_nom1, [2 * raw.gen("a"), raw.gen("a") * raw.gen("v1")])
    images = {g.name: None for g in nom1.gens}
    rep = verify_degreewise_iso(
        nom1,
        fourth_page_map(nom1, e2),
        lambda d: page_at(e2, d3, d),
        [Degree(2, 0, -2)],
    )
    assert not rep["ok"] and rep["witnesses"][0]["code"] == "group-mismatch"


def test_eighth_page_height_three_oracles():
    e4 = fourth_page(3, 14)
    d7 = DifferentialTable(e4, 7, d7_table(e4))
    d7.degree_audit()

    pg = page_at(e4, d7, Degree(9, 0, 5))
    assert pg.group.invariants() == (0, (2,))
    assert pg.names == ["a^5*w*v3"]

    pg = page_at(e4, d7, Degree(7, 0, 7))
    assert pg.group.invariants() == (0, (2,))
    assert pg.names == ["a^7*v3"]

    # the two source degrees of the survival scan
    pg = page_at(e4, d7, Degree(10, 0, -6))
    assert pg.group.invariants() == (2, ())
    pg = page_at(e4, d7, Degree(10, 0, -10))
    assert pg.group.invariants() == (2, ())

    # the degree the reference table expects d7(t2*w*v1^2) to hit is empty
    assert page_at(e4, d7, Degree(9, 0, 1)).group.is_zero()
    # and the image itself lands in the relation ideal: a*w^2*v1^2*v2
    img = d7.apply(e4.gen("t2") * e4.gen("w") * e4.gen("v1") ** 2)
    vec = e4.vector_of(img, Degree(9, 0, 1))
    rel_cols = e4.relation_columns_at(Degree(9, 0, 1))
    from slicealg.pages.turning import in_span

    assert in_span(rel_cols, vec, len(e4.monomials_at(Degree(9, 0, 1))))


def _prop46_markers(e4):
    t2wv1sq = e4.gen("t2") * e4.gen("w") * e4.gen("v1") ** 2
    return MarkerRules(
        doubles=True,
        multipliers=["m1"],
        asserted=[
            {
                "degree": (10, 0, -6),
                "element": t2wv1sq,
                "label": "t2*w*v1^2",
                "reason": "computed d7 vanishes on it; permanence asserted "
                "via the transfer argument for its double",
            }
        ],
    )


def test_survival_certificate_passes_with_markers():
    e4 = fourth_page(3, 14)
    d7 = DifferentialTable(e4, 7, d7_table(e4))
    target = e4.gen("a") ** 5 * e4.gen("w") * e4.gen("v3")
    rep = survival_certificate(e4, d7, target, Degree(9, 0, 5), _prop46_markers(e4))
    assert rep["ok"], rep
    assert rep["target_group"] == "Z/2"
    pages = [e["page"] for e in rep["entries"] if isinstance(e.get("page"), int)]
    assert pages == list(range(8, 16))
    by_page = {e["page"]: e for e in rep["entries"] if isinstance(e.get("page"), int)}
    assert by_page[11]["source"]["disposition"].startswith("permanent")
    assert by_page[15]["source"]["disposition"] == "permanent (marker span)"
    assert [a["class"] for a in rep["assumptions"]] == ["t2*w*v1^2"]
    assert rep["entries"][-1]["disposition"] == "region-vanishing"


def test_survival_unresolved_without_markers():
    e4 = fourth_page(3, 14)
    d7 = DifferentialTable(e4, 7, d7_table(e4))
    target = e4.gen("a") ** 5 * e4.gen("w") * e4.gen("v3")
    rep = survival_certificate(e4, d7, target, Degree(9, 0, 5), MarkerRules.none())
    assert not rep["ok"]
    unresolved = [
        e["page"]
        for e in rep["entries"]
        if e.get("source", {}).get("disposition") == "UNRESOLVED"
    ]
    assert 11 in unresolved and 15 in unresolved


def test_evenness_witnesses_height_three():
    e4 = fourth_page(3, 14)
    d7 = DifferentialTable(e4, 7, d7_table(e4))
    rep = evenness_and_torsion(e4, d7, Window(10, 0, 12))
    assert not rep["ok"]
    degs = [w["degree"] for w in rep["witnesses"]]
    assert degs == [(7, 0, 7), (9, 0, 5)]


def test_evenness_height_two_clean():
    e4 = fourth_page(2, 14)
    d7 = DifferentialTable(e4, 7, d7_table(e4))
    rep = evenness_and_torsion(e4, d7, Window(14, 0, 16))
    assert rep["ok"], rep["witnesses"]
    assert rep["nonzero_degrees"].get((0, 0, 0)) == "Z"


def test_collapse_certificate_height_one():
    e4 = fourth_page(1, 14)
    d7 = DifferentialTable(e4, 7, d7_table(e4))  # empty table at height 1
    assert not d7.images
    rep = collapse_certificate(e4, d7, Window(12, 0, 16))
    assert rep["ok"]
    assert rep["nonzero_degrees"].get((4, 0, 0)) == "Z"  # Delta = w*v1^2


def test_height_one_integer_model_and_hilbert():
    e4 = fourth_page(1, 16)
    model = height_one_integer(16)
    chain_map = height_one_integer_map(model, e4)
    chain_map.check_degrees()
    chain_map.check_relations()
    window = Window(12, 0, 16)
    allow = degree_filters(e4)
    degrees = [d for d in window.integer_degrees() if allow(d)]
    rep = verify_degreewise_iso(model, chain_map, lambda d: page_at(e4, None, d), degrees)
    assert rep["ok"], rep["witnesses"][:3]
    # free monomial count of the bookkeeping ring matches the page rank
    hb = hilbert_ring(16)
    for d in degrees:
        grp = page_at(e4, None, d).group
        assert grp.free_rank == len(hb.monomials_at(d)), d
        assert not grp.torsion


def test_generation_height_two():
    e4 = fourth_page(2, 14)
    d7 = DifferentialTable(e4, 7, d7_table(e4))
    classes = eighth_page_classes(e4)
    rep = generation_check(e4, d7, classes, Window(10, 4, 12))
    assert rep["ok"], rep["witnesses"][:3]
    assert rep["degrees_nonzero"] > 20

    # dropping [2t1] leaves (2, 0, -2) ungenerated
    pruned = [cl for cl in classes if cl[0] != "[2t1]"]
    rep = generation_check(e4, d7, pruned, Window(4, 2, 6))
    assert not rep["ok"]
    assert rep["witnesses"][0]["degree"] == (2, 0, -2)


def test_comparison_injectivity():
    e2 = start_page(2, 14)
    tgt = comparison_target(2, 14)
    cmp_map = comparison_map(e2, tgt)
    rep = comparison_injectivity(cmp_map, Window(12, 6, 16))
    assert rep["ok"], rep["witnesses"][:3]
    assert rep["kills_relations"]
    assert rep["degrees_checked"] > 30

    # sabotage: sending t1 to 0 merges a*t1 and a*x1^2-type classes
    bad_images = {"a": tgt.gen("a"), "u": tgt.gen("x1") ** 2 + tgt.gen("a") ** 2 * tgt.gen("z1sq")}
    from slicealg.graded import RingMap

    bad = RingMap(e2, tgt, bad_images)
    rep = comparison_injectivity(bad, Window(8, 4, 10))
    assert not rep["ok"]
