"""Conormalized cobar complex of the transformation algebroid.

C^{s,t} is spanned by symbols  a1^p a3^q [b_1|...|b_s] e  where each
slot b_k runs over the positive-degree part of the canonical basis of
the cover ring and e over the module generators.  The differential is
the full alternating sum of the cosimplicial structure maps, written in
far-left coefficient form: inserting a unit on the left, applying the
diagonal to one slot, and applying the coaction to the module symbol.
Individual faces emit unit slots; the signed total cancels them, which
is asserted on every call.  Any base-ring content produced in the
middle of a word migrates to the far left through the right unit, one
slot at a time.

Homology in a bidegree is a genuine subquotient: both the cycle and the
boundary side are taken modulo the relation columns of the module
fibre, over 2-local scalars.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd
from typing import Dict, List, Tuple

from ..exact import (
    AbelianGroup,
    kernel_basis,
    solve_lattice,
    solve_many,
    subquotient_homology,
)
from .algebroid import BASIS, Algebroid, BKey, GPoly, gp_add, gp_scale, gp_sub
from .comodule import GENS, RELATIONS, ModuleSolver, amonos_at, solve_coaction

AMono = Tuple[int, int]
Symbol = Tuple[AMono, Tuple[BKey, ...], str]

GEN_WEIGHT: Dict[str, int] = dict(GENS)
BBAR: Tuple[BKey, ...] = tuple(b for b in BASIS if b != (0, 0))


def _bwt(b: BKey) -> int:
    return 2 * b[0] + 6 * b[1]


def _rel_weight(rel) -> int:
    degs = {
        GEN_WEIGHT[g] + 2 * k[0] + 6 * k[1]
        for g, c in rel.items()
        for k in c
    }
    assert len(degs) == 1
    return degs.pop()


REL_WEIGHTS = tuple(_rel_weight(r) for r in RELATIONS)


def symbol_weight(sym: Symbol) -> int:
    (p, q), slots, gen = sym
    return 2 * p + 6 * q + sum(_bwt(b) for b in slots) + GEN_WEIGHT[gen]


def _slot_str(b: BKey) -> str:
    i, j = b
    parts = []
    if i:
        parts.append("s" if i == 1 else "s^%d" % i)
    if j:
        parts.append("t" if j == 1 else "t^%d" % j)
    return "*".join(parts) if parts else "1"


def symbol_str(sym: Symbol) -> str:
    (p, q), slots, gen = sym
    parts = []
    if p:
        parts.append("a1" if p == 1 else "a1^%d" % p)
    if q:
        parts.append("a3" if q == 1 else "a3^%d" % q)
    if slots:
        parts.append("[%s]" % "|".join(_slot_str(b) for b in slots))
    parts.append(gen)
    return "*".join(parts)


def vector_str(vec, basis) -> str:
    pieces = []
    for c, sym in zip(vec, basis):
        if c == 0:
            continue
        if c == 1:
            pieces.append(symbol_str(sym))
        else:
            pieces.append("%s*%s" % (c, symbol_str(sym)))
    return " + ".join(pieces) if pieces else "0"


class Cobar:
    """Bigraded conormalized cobar complex with 2-local homology."""

    def __init__(self, alg: Algebroid):
        self.alg = alg
        self.solver = ModuleSolver(alg)
        self.psi: Dict[str, tuple] = {
            name: self._normalized_coaction(name) for name, _ in GENS
        }
        self._migr: Dict[tuple, Dict] = {}
        self._diff: Dict[Symbol, Dict[Symbol, Fraction]] = {}
        self._bas: Dict[Tuple[int, int], List[Symbol]] = {}
        self._rel: Dict[Tuple[int, int], List[List[Fraction]]] = {}

    # -- coaction table ------------------------------------------------

    def _normalized_coaction(self, name: str) -> tuple:
        """Solved coaction rep whose only pure-base leg is the pinned unit.

        A raw representative may carry base-ring constants on lower
        generators (the e12 one does).  The counit axiom forces that
        defect to be a syzygy, so it is removed by subtracting relation
        columns; afterwards the last cobar face cannot leak unit slots.
        """
        pairs = solve_coaction(self.alg, name)
        assert pairs is not None, name
        table: Dict[str, Dict] = {g: dict(h) for g, h in pairs}
        weight = GEN_WEIGHT[name]
        index, _, _ = self.solver.columns(weight)
        pos = {key: n for n, key in enumerate(index)}
        defect = [Fraction(0)] * len(index)
        for g, h in table.items():
            for (p, q, i, j), c in h.items():
                if i == 0 and j == 0:
                    defect[pos[(g, (p, q))]] += c
        defect[pos[(name, (0, 0))]] -= 1
        if any(defect):
            # A relation column 1 (x) a*r carries its multiplier through
            # the right unit, so each leg is the full eta_R expansion;
            # the counit projection of that expansion is plain a*r,
            # which is what the defect is solved against.
            vecs: List[List[Fraction]] = []
            corr: List[Dict[str, GPoly]] = []
            for rel, wr in zip(RELATIONS, REL_WEIGHTS):
                for (pj, qj) in amonos_at(weight - wr):
                    vec = [Fraction(0)] * len(index)
                    legs: Dict[str, GPoly] = {}
                    for g, cpoly in rel.items():
                        for (cp, cq, ci, cj2), cg in cpoly.items():
                            assert ci == 0 and cj2 == 0
                            vec[pos[(g, (pj + cp, qj + cq))]] += cg
                            legs[g] = gp_add(
                                legs.get(g, {}),
                                gp_scale(
                                    self.alg._eta_monomial(pj + cp, qj + cq), cg
                                ),
                            )
                    vecs.append(vec)
                    corr.append(legs)
            assert vecs, name
            mat = [
                [int(vecs[j][i]) for j in range(len(vecs))]
                for i in range(len(index))
            ]
            sol = solve_lattice(mat, defect, len(index), len(vecs), two_local=True)
            assert sol is not None, name
            for j, c in enumerate(sol):
                if c == 0:
                    continue
                for g, gp in corr[j].items():
                    table[g] = gp_sub(table.get(g, {}), gp_scale(gp, c))
        for g, h in table.items():
            for (p, q, i, j), c in h.items():
                if i == 0 and j == 0:
                    assert g == name and (p, q) == (0, 0) and c == 1, name
        out = []
        for g, _ in GENS:
            h = {k: v for k, v in table.get(g, {}).items() if v != 0}
            if h:
                out.append((g, h))
        return tuple(out)

    # -- coordinate plumbing --------------------------------------------

    def _migrate(self, prefix: Tuple[BKey, ...], apq: AMono) -> Dict:
        """Move a base monomial left across the given slots.

        Crossing one slot multiplies it by the right unit of the
        monomial and re-decomposes; the base parts keep travelling.
        Returns {(far-left monomial, rewritten slots): coefficient}.
        """
        if apq == (0, 0) or not prefix:
            return {(apq, prefix): Fraction(1)}
        key = (prefix, apq)
        hit = self._migr.get(key)
        if hit is not None:
            return hit
        i, j = prefix[-1]
        slot_gp: GPoly = {(0, 0, i, j): Fraction(1)}
        prod = self.alg.mul_nf(slot_gp, self.alg._eta_monomial(*apq))
        out: Dict = {}
        for (p2, q2, i2, j2), c in prod.items():
            for ((p3, q3), pre2), c3 in self._migrate(prefix[:-1], (p2, q2)).items():
                k2 = ((p3, q3), pre2 + ((i2, j2),))
                nxt = out.get(k2, Fraction(0)) + c * c3
                if nxt:
                    out[k2] = nxt
                elif k2 in out:
                    del out[k2]
        self._migr[key] = out
        return out

    # -- the differential -----------------------------------------------

    def diff(self, sym: Symbol) -> Dict[Symbol, Fraction]:
        hit = self._diff.get(sym)
        if hit is not None:
            return hit
        (p, q), slots, gen = sym
        s = len(slots)
        acc: Dict[Symbol, Fraction] = {}

        def put(symbol: Symbol, c: Fraction):
            nxt = acc.get(symbol, Fraction(0)) + c
            if nxt:
                acc[symbol] = nxt
            elif symbol in acc:
                del acc[symbol]

        # face 0: unit on the left; the far-left monomial crosses it
        for (p2, q2, i2, j2), c in self.alg._eta_monomial(p, q).items():
            put(((p2, q2), ((i2, j2),) + slots, gen), c)
        # faces 1..s: diagonal on one slot, base content migrates left
        for k in range(1, s + 1):
            sign = -1 if k % 2 else 1
            for bright, g in self.alg.delta_basis(slots[k - 1]).slots.items():
                for (p2, q2, i2, j2), cg in g.items():
                    moved = self._migrate(slots[: k - 1], (p2, q2))
                    for ((pm, qm), pre), cm in moved.items():
                        put(
                            ((p + pm, q + qm),
                             pre + ((i2, j2), bright) + slots[k:],
                             gen),
                            sign * cg * cm,
                        )
        # last face: coaction on the module symbol
        sign = -1 if (s + 1) % 2 else 1
        for gen2, h in self.psi[gen]:
            for (p2, q2, i2, j2), ch in h.items():
                moved = self._migrate(slots, (p2, q2))
                for ((pm, qm), pre), cm in moved.items():
                    put(((p + pm, q + qm), pre + ((i2, j2),), gen2), sign * ch * cm)

        for out_sym in acc:
            assert all(b != (0, 0) for b in out_sym[1]), \
                "unit slot survived the face sum"
        self._diff[sym] = acc
        return acc

    # -- bases and relation columns ---------------------------------------

    def basis(self, s: int, t: int) -> List[Symbol]:
        key = (s, t)
        hit = self._bas.get(key)
        if hit is not None:
            return hit
        out: List[Symbol] = []
        for T in product(BBAR, repeat=s):
            wT = sum(_bwt(b) for b in T)
            if wT > t:
                continue
            for gen, wg in GENS:
                rem = t - wT - wg
                if rem < 0:
                    continue
                for am in amonos_at(rem):
                    out.append((am, T, gen))
        out.sort()
        self._bas[key] = out
        return out

    def relations(self, s: int, t: int) -> List[List[Fraction]]:
        """Relation columns of the conormalized piece at (s, t).

        Syzygy multiples live under arbitrary basis words, unit slots
        included.  The inner multiplier sits on the module side and
        migrates across the word; the outer one multiplies on the far
        left.  Both are needed: migration and left multiplication do
        not commute.  A column over a unit-bearing word is not itself
        conormalized, but combinations cancelling every unit-slot
        coordinate are, so the full column set is intersected with the
        unit-free span through a kernel computation on the unit rows.
        """
        key = (s, t)
        hit = self._rel.get(key)
        if hit is not None:
            return hit
        seen = set()
        cols: List[Dict[Symbol, Fraction]] = []
        for T in product(BASIS, repeat=s):
            wT = sum(_bwt(b) for b in T)
            for rel, wr in zip(RELATIONS, REL_WEIGHTS):
                rem = t - wT - wr
                if rem < 0:
                    continue
                for win in range(0, rem + 1, 2):
                    for inner in amonos_at(win):
                        for outer in amonos_at(rem - win):
                            col: Dict[Symbol, Fraction] = {}
                            for g, cpoly in rel.items():
                                for (cp, cq, ci, cj), cg in cpoly.items():
                                    assert ci == 0 and cj == 0
                                    moved = self._migrate(
                                        T, (inner[0] + cp, inner[1] + cq))
                                    for ((pm, qm), pre), cm in moved.items():
                                        sym = ((outer[0] + pm, outer[1] + qm),
                                               pre, g)
                                        nxt = col.get(sym, Fraction(0)) + cg * cm
                                        if nxt:
                                            col[sym] = nxt
                                        elif sym in col:
                                            del col[sym]
                            if not col:
                                continue
                            fro = tuple(sorted(col.items()))
                            if fro in seen:
                                continue
                            seen.add(fro)
                            cols.append(col)
        bbar_index = {sym: i for i, sym in enumerate(self.basis(s, t))}
        unit_syms = sorted(
            {sym for col in cols for sym in col if sym not in bbar_index}
        )
        for sym in unit_syms:
            assert any(b == (0, 0) for b in sym[1]), sym
        out: List[List[Fraction]] = []
        if not unit_syms:
            for col in cols:
                vec = [Fraction(0)] * len(bbar_index)
                for sym2, c in col.items():
                    vec[bbar_index[sym2]] = c
                out.append(vec)
        elif cols:
            # odd column scaling keeps the 2-local span
            ints: List[Dict[Symbol, int]] = []
            for col in cols:
                m = 1
                for c in col.values():
                    d = c.denominator
                    assert d % 2 == 1
                    m = m * d // gcd(m, d)
                ints.append({sym: int(c * m) for sym, c in col.items()})
            umat = [[col.get(sym, 0) for col in ints] for sym in unit_syms]
            kern = kernel_basis(umat, len(unit_syms), len(ints))
            for y in kern:
                vec = [0] * len(bbar_index)
                for jcol, cy in enumerate(y):
                    if cy == 0:
                        continue
                    for sym2, v in ints[jcol].items():
                        if sym2 in bbar_index:
                            vec[bbar_index[sym2]] += cy * v
                if any(vec):
                    out.append([Fraction(x) for x in vec])
        self._rel[key] = out
        return out

    # -- homology ----------------------------------------------------------

    def _diff_columns(self, s: int, t: int, index_next) -> List[List[Fraction]]:
        cols = []
        for sym in self.basis(s, t):
            col = [Fraction(0)] * len(index_next)
            for sym2, c in self.diff(sym).items():
                col[index_next[sym2]] = c
            cols.append(col)
        return cols

    def homology(self, s: int, t: int) -> AbelianGroup:
        bas = self.basis(s, t)
        n = len(bas)
        if n == 0:
            return AbelianGroup(0, ring="Z(2)")
        bnext = self.basis(s + 1, t)
        index_next = {sym: i for i, sym in enumerate(bnext)}
        d_out = None
        if bnext:
            d_out = [[Fraction(0)] * n for _ in range(len(bnext))]
            for jcol, sym in enumerate(bas):
                for sym2, c in self.diff(sym).items():
                    d_out[index_next[sym2]][jcol] = c
        d_in: List[List[Fraction]] = []
        if s > 0:
            index_here = {sym: i for i, sym in enumerate(bas)}
            d_in = self._diff_columns(s - 1, t, index_here)
        grp, _ = subquotient_homology(
            n,
            self.relations(s, t),
            d_in,
            d_out,
            len(bnext),
            self.relations(s + 1, t),
            two_local=True,
        )
        return grp

    def d_square_defect(self, s: int, t: int) -> bool:
        """True when d∘d vanishes modulo the relation columns at (s+2, t)."""
        bas2 = self.basis(s + 2, t)
        index2 = {sym: i for i, sym in enumerate(bas2)}
        targets = []
        for sym in self.basis(s, t):
            acc: Dict[Symbol, Fraction] = {}
            for mid, c in self.diff(sym).items():
                for out_sym, c2 in self.diff(mid).items():
                    nxt = acc.get(out_sym, Fraction(0)) + c * c2
                    if nxt:
                        acc[out_sym] = nxt
                    elif out_sym in acc:
                        del acc[out_sym]
            if acc:
                vec = [Fraction(0)] * len(bas2)
                for sym2, c in acc.items():
                    vec[index2[sym2]] = c
                targets.append(vec)
        if not targets:
            return True
        return _inside_span(self.relations(s + 2, t), targets, len(bas2))


def _inside_span(cols, targets, n: int) -> bool:
    """Do all targets lie in the 2-local span of the columns?"""
    if not cols:
        return all(all(x == 0 for x in tgt) for tgt in targets)
    mat_rows = []
    tgt_rows = []
    for i in range(n):
        row = [Fraction(col[i]) for col in cols]
        trow = [Fraction(tg[i]) for tg in targets]
        m = 1
        for x in row + trow:
            d = x.denominator
            assert d % 2 == 1, "even denominator in a 2-local span test"
            m = m * d // gcd(m, d)
        mat_rows.append([int(x * m) for x in row])
        tgt_rows.append([x * m for x in trow])
    cols_t = [[tgt_rows[i][k] for i in range(n)] for k in range(len(targets))]
    return solve_many(mat_rows, cols_t, n, len(cols), two_local=True) is not None


def cobar_ext(alg: Algebroid, s_max: int = 3, t_max: int = 12):
    """Ext table {(s, t): AbelianGroup} for 0 <= s <= s_max, 0 <= t <= t_max."""
    cx = Cobar(alg)
    out = {}
    for t in range(0, t_max + 1):
        for s in range(0, s_max + 1):
            out[(s, t)] = cx.homology(s, t)
    return out
