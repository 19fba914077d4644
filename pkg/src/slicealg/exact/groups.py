"""Finitely generated abelian groups presented by integer matrices.

cokernel and homology are the two constructors everything else reduces to.
subquotient_homology is the workhorse for spectral sequence pages: homology
of a three term chain of free modules in the presence of ambient relation
columns at every spot, computed entirely over Z (or 2-locally).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .snf import smith_normal_form, kernel_basis, lattice_basis, solve_many


class BoundariesNotCycles(Exception):
    """Raised when a supposed boundary fails to be a cycle.

    The code string "boundaries-not-cycles" is stable; details follow it.
    """

    def __init__(self, detail=""):
        super().__init__("boundaries-not-cycles" + (": " + detail if detail else ""))


@dataclass
class AbelianGroup:
    """free_rank copies of Z (or Z_(2)) plus cyclic torsion factors.

    torsion is a divisibility chain of integers >= 2.  gens holds one
    ambient integer vector per summand, torsion generators first, in the
    coordinates the caller supplied; it may be empty when the caller does
    not need witnesses.  ring is "Z" or "Z(2)" and only affects printing.
    """

    free_rank: int
    torsion: tuple = ()
    gens: list = field(default_factory=list)
    ring: str = "Z"

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def invariants(self):
        return (self.free_rank, tuple(self.torsion))

    def order(self):
        """Group order, None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def __str__(self):
        base = "Z(2)" if self.ring == "Z(2)" else "Z"
        parts = []
        if self.free_rank == 1:
            parts.append(base)
        elif self.free_rank > 1:
            parts.append("%s^%d" % (base, self.free_rank))
        for t in self.torsion:
            parts.append("Z/%d" % t)
        return " + ".join(parts) if parts else "0"


def _two_local_part(d: int) -> int:
    p = 1
    while d % 2 == 0:
        d //= 2
        p *= 2
    return p


def _clear_columns(columns, nrows):
    """Scale each Fraction column by the odd lcm of its denominators.

    Column scaling by odd numbers is unimodular over Z_(2), so kernels,
    spans and cokernel invariants are unchanged 2-locally.
    """
    out = []
    for col in columns:
        denoms = []
        for x in col:
            f = Fraction(x)
            assert f.denominator % 2 == 1, "not 2-local: %s" % (x,)
            denoms.append(f.denominator)
        m = 1
        for d in denoms:
            g = _gcd(m, d)
            m = m // g * d
        out.append([int(Fraction(x) * m) for x in col])
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _clear_rows(rows):
    """Multiply each row by the odd lcm of its denominators (unit over Z_(2))."""
    out = []
    for row in rows:
        m = 1
        for x in row:
            d = Fraction(x).denominator
            assert d % 2 == 1, "not 2-local: %s" % (x,)
            g = _gcd(m, d)
            m = m // g * d
        out.append([int(Fraction(x) * m) for x in row])
    return out


def cokernel(n_ambient: int, columns, two_local: bool = False) -> AbelianGroup:
    """Z^n modulo the span of the given columns, with generator witnesses."""
    if n_ambient == 0:
        return AbelianGroup(0, ring="Z(2)" if two_local else "Z")
    if two_local:
        columns = _clear_columns(columns, n_ambient)
    if not columns:
        gens = [[1 if i == j else 0 for i in range(n_ambient)] for j in range(n_ambient)]
        return AbelianGroup(n_ambient, (), gens, "Z(2)" if two_local else "Z")
    mat = [[col[i] for col in columns] for i in range(n_ambient)]
    res = smith_normal_form(mat, n_ambient, len(columns))
    torsion = []
    tor_gens = []
    for i in range(res.rank):
        d = res.d[i]
        if two_local:
            d = _two_local_part(d)
        if d >= 2:
            torsion.append(d)
            tor_gens.append([res.Uinv[r][i] for r in range(n_ambient)])
    free_gens = [[res.Uinv[r][i] for r in range(n_ambient)] for i in range(res.rank, n_ambient)]
    return AbelianGroup(
        n_ambient - res.rank,
        tuple(torsion),
        tor_gens + free_gens,
        "Z(2)" if two_local else "Z",
    )


def homology(Z_mat, B_cols, n_chain: int, n_next: int, two_local: bool = False):
    """ker(Z) / span(B) for a free chain, with the cycle check enforced.

    Z_mat is the outgoing matrix (n_next x n_chain), B_cols the incoming
    boundary columns inside Z^n_chain.  Raises BoundariesNotCycles when
    Z * B != 0.
    """
    return subquotient_homology(
        n_chain,
        rels_here=[],
        d_in_cols=B_cols,
        d_out=Z_mat,
        n_next=n_next,
        rels_next=[],
        two_local=two_local,
    )


def subquotient_homology(
    n: int,
    rels_here,
    d_in_cols,
    d_out,
    n_next: int,
    rels_next,
    two_local: bool = False,
):
    """Homology at the middle of  prev --d_in--> (Z^n / rels) --d_out--> (Z^n_next / rels_next).

    K = {v : d_out(v) in span(rels_next)} is found by projecting the kernel
    of the stacked matrix [d_out | rels_next] onto the first block, then
    H = K / span(d_in columns + rels_here).  Returns (AbelianGroup, KB)
    where KB lists the kernel lattice basis as ambient columns and the
    group generators are expressed in ambient coordinates.
    """
    ring = "Z(2)" if two_local else "Z"
    if n == 0:
        return AbelianGroup(0, ring=ring), []

    if n_next == 0 or d_out is None:
        KB = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    else:
        stacked = [
            [d_out[i][j] for j in range(n)] + [rc[i] for rc in rels_next]
            for i in range(n_next)
        ]
        if two_local:
            # scale rows by odd units; the saturated kernel is unchanged
            stacked = _clear_rows(stacked)
        kern = kernel_basis(stacked, n_next, n + len(rels_next))
        proj = [v[:n] for v in kern]
        KB = lattice_basis(proj, n)
    k = len(KB)
    mod_cols = list(d_in_cols) + list(rels_here)
    if not mod_cols:
        return AbelianGroup(k, (), [list(v) for v in KB], ring), KB
    if k == 0:
        # everything must die already; nonzero boundary would not be a cycle
        for col in mod_cols:
            if any(x != 0 for x in col):
                raise BoundariesNotCycles("nonzero boundary with zero cycle lattice")
        return AbelianGroup(0, ring=ring), KB
    kb_mat = [[KB[j][i] for j in range(k)] for i in range(n)]
    X = solve_many(kb_mat, mod_cols, n, k, two_local=two_local)
    if X is None:
        raise BoundariesNotCycles("boundary column outside the cycle lattice")
    grp = cokernel(k, X, two_local=two_local)
    # lift generators from K coordinates to ambient coordinates
    amb = []
    for g in grp.gens:
        amb.append([sum(KB[j][i] * g[j] for j in range(k)) for i in range(n)])
    grp.gens = amb
    return grp, KB
