# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled Smith normal form kernel.

Mirror of _snf_py.snf_kernel with identical pivoting, so both backends
produce bit-identical transforms.  Entries stay Python ints (they can be
arbitrarily large); the win is typed index arithmetic on flat lists.
"""


def snf_kernel(mat, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t i, j, k, r, pi, pj, rank
    cdef list A = []
    for row in mat:
        A.extend(row)
    cdef list U = [0] * (nrows * nrows)
    cdef list Uinv = [0] * (nrows * nrows)
    cdef list V = [0] * (ncols * ncols)
    for i in range(nrows):
        U[i * nrows + i] = 1
        Uinv[i * nrows + i] = 1
    for i in range(ncols):
        V[i * ncols + i] = 1

    def reduce_from(Py_ssize_t k0):
        cdef Py_ssize_t k = k0, i, j, r, pi, pj
        cdef bint clean
        while k < nrows and k < ncols:
            best = 0
            pi = -1
            pj = -1
            for i in range(k, nrows):
                for j in range(k, ncols):
                    a = A[i * ncols + j]
                    if a != 0:
                        if a < 0:
                            a = -a
                        if best == 0 or a < best:
                            best = a
                            pi = i
                            pj = j
            if pi < 0:
                break
            if pi != k:
                for j in range(ncols):
                    A[pi * ncols + j], A[k * ncols + j] = A[k * ncols + j], A[pi * ncols + j]
                for j in range(nrows):
                    U[pi * nrows + j], U[k * nrows + j] = U[k * nrows + j], U[pi * nrows + j]
                for r in range(nrows):
                    Uinv[r * nrows + pi], Uinv[r * nrows + k] = Uinv[r * nrows + k], Uinv[r * nrows + pi]
            if pj != k:
                for i in range(nrows):
                    A[i * ncols + pj], A[i * ncols + k] = A[i * ncols + k], A[i * ncols + pj]
                for i in range(ncols):
                    V[i * ncols + pj], V[i * ncols + k] = V[i * ncols + k], V[i * ncols + pj]
            if A[k * ncols + k] < 0:
                for j in range(ncols):
                    A[k * ncols + j] = -A[k * ncols + j]
                for j in range(nrows):
                    U[k * nrows + j] = -U[k * nrows + j]
                for r in range(nrows):
                    Uinv[r * nrows + k] = -Uinv[r * nrows + k]
            clean = True
            piv = A[k * ncols + k]
            for i in range(nrows):
                if i != k:
                    a = A[i * ncols + k]
                    if a != 0:
                        q = a // piv
                        if q:
                            for j in range(ncols):
                                A[i * ncols + j] = A[i * ncols + j] - q * A[k * ncols + j]
                            for j in range(nrows):
                                U[i * nrows + j] = U[i * nrows + j] - q * U[k * nrows + j]
                            for r in range(nrows):
                                Uinv[r * nrows + k] = Uinv[r * nrows + k] + q * Uinv[r * nrows + i]
                        if A[i * ncols + k] != 0:
                            clean = False
            for j in range(ncols):
                if j != k:
                    a = A[k * ncols + j]
                    if a != 0:
                        q = a // piv
                        if q:
                            for i in range(nrows):
                                A[i * ncols + j] = A[i * ncols + j] - q * A[i * ncols + k]
                            for i in range(ncols):
                                V[i * ncols + j] = V[i * ncols + j] - q * V[i * ncols + k]
                        if A[k * ncols + j] != 0:
                            clean = False
            if clean:
                k += 1

    reduce_from(0)

    rank = 0
    while rank < nrows and rank < ncols and A[rank * ncols + rank] != 0:
        rank += 1
    i = 0
    while i + 1 < rank:
        if A[(i + 1) * ncols + i + 1] % A[i * ncols + i] != 0:
            for r in range(nrows):
                A[r * ncols + i] = A[r * ncols + i] + A[r * ncols + i + 1]
            for r in range(ncols):
                V[r * ncols + i] = V[r * ncols + i] + V[r * ncols + i + 1]
            reduce_from(i)
            if i > 0:
                i -= 1
        else:
            i += 1

    cdef Py_ssize_t m = nrows if nrows < ncols else ncols
    d = [A[i * ncols + i] for i in range(m)]
    Um = [[U[i * nrows + j] for j in range(nrows)] for i in range(nrows)]
    Vm = [[V[i * ncols + j] for j in range(ncols)] for i in range(ncols)]
    Uim = [[Uinv[i * nrows + j] for j in range(nrows)] for i in range(nrows)]
    return d, Um, Vm, Uim
