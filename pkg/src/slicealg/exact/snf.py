"""Smith normal form and the lattice operations built on it.

Backend selection happens at import time: the compiled kernel when it is
available, the pure Python one otherwise or when SLICEALG_PURE=1 is set.
Both kernels use identical pivoting, so every downstream result is
independent of the backend.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

if os.environ.get("SLICEALG_PURE"):
    from ._snf_py import snf_kernel

    BACKEND = "python"
else:
    try:
        from ._snfcore import snf_kernel  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from ._snf_py import snf_kernel

        BACKEND = "python"


@dataclass
class SNFResult:
    """U * M * V = D with D = diag(d), U, V unimodular, Uinv = U^-1.

    d has length min(nrows, ncols), entries nonnegative, nonzero entries
    first and each dividing the next.
    """

    nrows: int
    ncols: int
    d: list
    U: list
    V: list
    Uinv: list

    @property
    def rank(self) -> int:
        return sum(1 for x in self.d if x != 0)


def smith_normal_form(mat, nrows=None, ncols=None) -> SNFResult:
    if nrows is None:
        nrows = len(mat)
    if ncols is None:
        ncols = len(mat[0]) if nrows else 0
    for row in mat:
        assert len(row) == ncols, "ragged matrix"
    d, U, V, Uinv = snf_kernel(mat, nrows, ncols)
    return SNFResult(nrows, ncols, d, U, V, Uinv)


def kernel_basis(mat, nrows=None, ncols=None):
    """Basis of {x : M x = 0} as a list of integer column vectors.

    Columns of V whose diagonal entry is zero (or beyond the diagonal)
    form a basis of the saturated kernel lattice.
    """
    res = smith_normal_form(mat, nrows, ncols)
    out = []
    for j in range(res.ncols):
        if j >= len(res.d) or res.d[j] == 0:
            out.append([res.V[i][j] for i in range(res.ncols)])
    return out


def lattice_basis(columns, nrows):
    """Canonical basis of the integer span of the given column vectors.

    From U M V = D the span of the columns of M equals the span of
    d_i * (Uinv column i) over the nonzero d_i.
    """
    if not columns:
        return []
    mat = [[col[i] for col in columns] for i in range(nrows)]
    res = smith_normal_form(mat, nrows, len(columns))
    out = []
    for i in range(res.rank):
        di = res.d[i]
        out.append([res.Uinv[r][i] * di for r in range(nrows)])
    return out


def solve_lattice(mat, b, nrows=None, ncols=None, two_local=False):
    """One solution of M x = b, or None.

    Over Z by default.  With two_local=True divisibility is only required
    2-adically, so the solution may have odd denominators (Fractions).
    """
    sols = solve_many(mat, [b], nrows, ncols, two_local=two_local)
    return None if sols is None else sols[0]


def solve_many(mat, cols, nrows=None, ncols=None, two_local=False):
    """Solve M X = B column by column, reusing one SNF.  None if any column fails.

    The transforms are applied sparsely: only the U and V columns touched
    by nonzero entries are materialized, which is what makes large batches
    of mostly-empty right-hand sides cheap.
    """
    if nrows is None:
        nrows = len(mat)
    if ncols is None:
        ncols = len(mat[0]) if nrows else 0
    res = smith_normal_form(mat, nrows, ncols)
    d, U, V = res.d, res.U, res.V
    nd = len(d)
    u_cols = [None] * nrows
    v_cols = [None] * ncols
    out = []
    for b in cols:
        ub = [0] * nrows
        for j, bj in enumerate(b):
            if bj:
                col = u_cols[j]
                if col is None:
                    col = u_cols[j] = [
                        (i, U[i][j]) for i in range(nrows) if U[i][j]
                    ]
                for i, u in col:
                    ub[i] += u * bj
        y = [0] * ncols
        ok = True
        for i in range(nrows):
            di = d[i] if i < nd else 0
            if di == 0:
                if ub[i] != 0:
                    ok = False
                    break
            elif two_local:
                if ub[i] != 0:
                    q = Fraction(ub[i], di)
                    if q.denominator % 2 == 0:
                        ok = False
                        break
                    y[i] = q
            else:
                if ub[i] % di != 0:
                    ok = False
                    break
                y[i] = ub[i] // di
        if not ok:
            return None
        x = [0] * ncols
        for j in range(ncols):
            yj = y[j]
            if yj:
                col = v_cols[j]
                if col is None:
                    col = v_cols[j] = [
                        (i, V[i][j]) for i in range(ncols) if V[i][j]
                    ]
                for i, v in col:
                    x[i] += v * yj
        out.append(x)
    return out
