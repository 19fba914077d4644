"""Turning pages: homology of a presented page at one degree.

page_at computes cycles-mod-boundaries of a differential table at a single
degree, in the presence of the presentation's relation columns on every
neighbouring degree.  verify_degreewise_iso compares a computed page with
a model presentation through a window, degree by degree, and reports
localized witnesses on any failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..exact import AbelianGroup, cokernel, subquotient_homology
from ..exact.snf import solve_many
from ..graded import Degree
from .differentials import DifferentialTable


def degree_filters(pres):
    """Emptiness filters proved on the generator degree table.

    Scans the sixteen nonzero sign patterns L = alpha*c + beta*w + gamma*s.
    If L >= 0 on every generator then L >= 0 on every monomial; if all the
    generator values share a gcd m >= 2 then L is divisible by m on every
    monomial.  Returns allow(degree): False means provably no monomials.
    """
    lowers = []
    moduli = []
    degs = [g.degree for g in pres.gens]
    for al in (-1, 0, 1):
        for be in (-1, 0, 1):
            for ga in (-1, 0, 1):
                if al == be == ga == 0:
                    continue
                vals = [al * d.c + be * d.w + ga * d.s for d in degs]
                if all(v >= 0 for v in vals) and any(v > 0 for v in vals):
                    lowers.append((al, be, ga))
                g = 0
                for v in vals:
                    g = _gcd(g, v)
                if g >= 2:
                    moduli.append((al, be, ga, g))

    def allow(d):
        c, w, s = d
        for al, be, ga in lowers:
            if al * c + be * w + ga * s < 0:
                return False
        for al, be, ga, m in moduli:
            if (al * c + be * w + ga * s) % m:
                return False
        return True

    return allow


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def candidate_degrees(window, *allows):
    """Window degrees passing at least one of the given filters."""
    for d in window.degrees():
        if any(allow(d) for allow in allows):
            yield d


@dataclass
class PageGroup:
    degree: Degree
    group: AbelianGroup
    kb: list = field(default_factory=list)       # cycle lattice, ambient columns
    mod_cols: list = field(default_factory=list)  # boundaries + relations, K coords
    names: list = field(default_factory=list)


def _class_name(pres, vec, degree):
    # a generator is only defined up to sign; print the positive lift
    monos = pres.monomials_at(degree)
    from ..graded.rings import grevlex_key

    lead = max(
        (m for m, x in zip(monos, vec) if x),
        key=grevlex_key,
        default=None,
    )
    if lead is not None and vec[list(monos).index(lead)] < 0:
        vec = [-x for x in vec]
    body = pres.vector_str(vec, degree)
    nz = [x for x in vec if x]
    if len(nz) == 1 and nz[0] == 1:
        return body
    return "[" + body + "]"


def page_at(pres, diff, degree, two_local=False) -> PageGroup:
    """Homology of the table at one degree; diff None means the page itself."""
    degree = Degree(*degree)
    n = len(pres.monomials_at(degree))
    ring = "Z(2)" if two_local else "Z"
    if n == 0:
        return PageGroup(degree, AbelianGroup(0, ring=ring))
    rels_here = pres.relation_columns_at(degree)
    if diff is None:
        d_in, d_out_rows, n_next, rels_next = [], None, 0, []
    else:
        src = degree.sub(diff.shift)
        d_in = diff.columns_at(src) if pres.monomials_at(src) else []
        tgt = degree.add(diff.shift)
        n_next = len(pres.monomials_at(tgt))
        d_out_rows = diff.rows_at(degree) if n_next else None
        rels_next = pres.relation_columns_at(tgt) if n_next else []
    grp, kb = subquotient_homology(
        n, rels_here, d_in, d_out_rows, n_next, rels_next, two_local=two_local
    )
    k = len(kb)
    mod_cols = []
    all_mod = list(d_in) + list(rels_here)
    if k and all_mod:
        kb_mat = [[kb[j][i] for j in range(k)] for i in range(n)]
        mod_cols = solve_many(kb_mat, all_mod, n, k, two_local=two_local)
        assert mod_cols is not None  # subquotient_homology already checked
    names = [_class_name(pres, g, degree) for g in grp.gens]
    return PageGroup(degree, grp, kb, mod_cols, names)


def in_span(cols, vec, k, two_local=False):
    """Is vec in the integer (or 2-local) column span of cols?"""
    if not any(vec):
        return True
    if not cols:
        return False
    if two_local:
        from ..exact.groups import _clear_columns

        cols = _clear_columns(cols, k)
    mat = [[col[i] for col in cols] for i in range(k)]
    return solve_many(mat, [vec], k, len(cols), two_local=two_local) is not None


def kb_coordinates(kb, vec, n, two_local=False):
    """Solve KB x = vec; None when vec is not a cycle."""
    k = len(kb)
    if k == 0:
        return [] if not any(vec) else None
    kb_mat = [[kb[j][i] for j in range(k)] for i in range(n)]
    sols = solve_many(kb_mat, [vec], n, k, two_local=two_local)
    return None if sols is None else sols[0]


def verify_degreewise_iso(model, chain_map, page_fn, degrees, two_local=False, obstruction_shift=None):
    """Compare a model presentation with a computed page over many degrees.

    For each degree: the model group and the computed group must share
    invariants, the model monomials must map to cycles, the model relations
    must map to boundaries, and the mapped monomials must generate.  A
    surjection between groups with equal invariants is an isomorphism, so
    this is a complete degreewise check.

    obstruction_shift is the differential's degree shift; a failed cycle
    check is reported at the shifted degree, where the obstruction lives.
    """
    witnesses = []
    checked = nonzero = 0
    chain = chain_map.target
    for d in degrees:
        d = Degree(*d)
        checked += 1
        model_monos = model.monomials_at(d)
        mg = model.degreewise_group(d, two_local=two_local)
        pg = page_fn(d)
        if mg.is_zero() and pg.group.is_zero():
            continue
        nonzero += 1
        if mg.invariants() != pg.group.invariants():
            witnesses.append(
                {
                    "code": "group-mismatch",
                    "degree": tuple(d),
                    "model": str(mg),
                    "computed": str(pg.group),
                }
            )
            continue
        n = len(chain.monomials_at(d))
        k = len(pg.kb)
        img_cols = []
        bad = False
        for m in model_monos:
            vec = chain.vector_of(chain_map(model.monomial(m)), d)
            x = kb_coordinates(pg.kb, vec, n, two_local=two_local)
            if x is None:
                wit = {
                    "code": "target-not-cycle",
                    "degree": tuple(d),
                    "monomial": model.monomial_str(m),
                }
                if obstruction_shift is not None:
                    wit["witness_degree"] = tuple(d.add(obstruction_shift))
                witnesses.append(wit)
                bad = True
                break
            img_cols.append(x)
        if bad:
            continue
        for rel in model.relations:
            rd = rel.degree()
            for m in model.monomials_at(d.sub(rd)):
                vec = chain.vector_of(chain_map(model.monomial(m) * rel), d)
                x = kb_coordinates(pg.kb, vec, n, two_local=two_local)
                if x is None or not in_span(pg.mod_cols, x, k, two_local=two_local):
                    witnesses.append(
                        {
                            "code": "relation-not-preserved",
                            "degree": tuple(d),
                            "relation": str(rel),
                            "monomial": model.monomial_str(m),
                        }
                    )
                    bad = True
                    break
            if bad:
                break
        if bad:
            continue
        if k:
            rest = cokernel(k, list(pg.mod_cols) + img_cols, two_local=two_local)
            if not rest.is_zero():
                witnesses.append(
                    {
                        "code": "not-surjective",
                        "degree": tuple(d),
                        "cokernel": str(rest),
                    }
                )
    return {
        "ok": not witnesses,
        "witnesses": witnesses,
        "degrees_checked": checked,
        "degrees_nonzero": nonzero,
    }
