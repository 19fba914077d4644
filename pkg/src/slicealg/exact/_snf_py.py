"""Pure Python Smith normal form kernel.

Reduction over Z with full transform bookkeeping: returns (d, U, V, Uinv)
with U * M * V = D, U and V unimodular, Uinv = U^-1.  Pivot selection is
the smallest nonzero absolute value with ties broken by lowest (row, col),
so results are deterministic and the compiled twin must match bit for bit.
"""

from __future__ import annotations


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def snf_kernel(mat, nrows, ncols):
    A = [list(row) for row in mat]
    U = _identity(nrows)
    Uinv = _identity(nrows)
    V = _identity(ncols)

    def row_sub(i, k, q):
        # row_i -= q * row_k
        Ai, Ak = A[i], A[k]
        for j in range(ncols):
            Ai[j] -= q * Ak[j]
        Ui, Uk = U[i], U[k]
        for j in range(nrows):
            Ui[j] -= q * Uk[j]
        for r in range(nrows):
            Uinv[r][k] += q * Uinv[r][i]

    def col_sub(j, k, q):
        # col_j -= q * col_k
        for i in range(nrows):
            A[i][j] -= q * A[i][k]
        for i in range(ncols):
            V[i][j] -= q * V[i][k]

    def row_swap(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]
        for r in range(nrows):
            Uinv[r][i], Uinv[r][k] = Uinv[r][k], Uinv[r][i]

    def col_swap(j, k):
        for i in range(nrows):
            A[i][j], A[i][k] = A[i][k], A[i][j]
        for i in range(ncols):
            V[i][j], V[i][k] = V[i][k], V[i][j]

    def row_negate(i):
        Ai = A[i]
        for j in range(ncols):
            Ai[j] = -Ai[j]
        Ui = U[i]
        for j in range(nrows):
            Ui[j] = -Ui[j]
        for r in range(nrows):
            Uinv[r][i] = -Uinv[r][i]

    def reduce_from(k0):
        k = k0
        while k < nrows and k < ncols:
            # smallest |entry| in A[k:, k:], lowest (row, col) on ties
            best = 0
            pi = pj = -1
            for i in range(k, nrows):
                Ai = A[i]
                for j in range(k, ncols):
                    a = Ai[j]
                    if a != 0:
                        if a < 0:
                            a = -a
                        if best == 0 or a < best:
                            best = a
                            pi, pj = i, j
            if pi < 0:
                break
            if pi != k:
                row_swap(pi, k)
            if pj != k:
                col_swap(pj, k)
            if A[k][k] < 0:
                row_negate(k)
            clean = True
            piv = A[k][k]
            for i in range(nrows):
                if i != k and A[i][k] != 0:
                    q = A[i][k] // piv
                    if q:
                        row_sub(i, k, q)
                    if A[i][k] != 0:
                        clean = False
            for j in range(ncols):
                if j != k and A[k][j] != 0:
                    q = A[k][j] // piv
                    if q:
                        col_sub(j, k, q)
                    if A[k][j] != 0:
                        clean = False
            if clean:
                k += 1
            # otherwise a remainder smaller than the pivot appeared, repeat

    reduce_from(0)

    # enforce the divisibility chain d_i | d_{i+1}
    rank = 0
    while rank < nrows and rank < ncols and A[rank][rank] != 0:
        rank += 1
    i = 0
    while i + 1 < rank:
        if A[i + 1][i + 1] % A[i][i] != 0:
            # fold column i+1 into column i, then re-reduce from i
            col_sub(i, i + 1, -1)
            reduce_from(i)
            if i > 0:
                i -= 1
        else:
            i += 1

    d = [A[i][i] for i in range(min(nrows, ncols))]
    return d, U, V, Uinv
