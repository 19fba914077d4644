from fractions import Fraction
from random import Random

from slicealg.exact import smith_normal_form, kernel_basis, lattice_basis, solve_lattice
from slicealg.exact.snf import solve_many


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)] for i in range(n)]


def is_identity(A):
    return all(A[i][j] == (1 if i == j else 0) for i in range(len(A)) for j in range(len(A)))


def check_snf(mat, nrows, ncols):
    res = smith_normal_form(mat, nrows, ncols)
    # U M V = D
    if nrows and ncols:
        D = mat_mul(mat_mul(res.U, mat), res.V)
        for i in range(nrows):
            for j in range(ncols):
                want = res.d[i] if i == j and i < len(res.d) else 0
                assert D[i][j] == want
    assert is_identity(mat_mul(res.U, res.Uinv))
    # nonnegative divisibility chain, zeros last
    nz = [x for x in res.d if x != 0]
    assert all(x > 0 for x in nz)
    assert res.d[: len(nz)] == nz
    for i in range(len(nz) - 1):
        assert nz[i + 1] % nz[i] == 0
    return res


def test_frozen_examples():
    res = check_snf([[2, 4], [6, 8]], 2, 2)
    assert res.d == [2, 4]
    res = check_snf([[1, 0, 0], [0, 1, 0], [0, 0, 1]], 3, 3)
    assert res.d == [1, 1, 1]
    res = check_snf([[0, 0], [0, 0], [0, 0]], 3, 2)
    assert res.d == [0, 0]
    # chain fixup: diag(2,3) has invariant factors 1, 6
    res = check_snf([[2, 0], [0, 3]], 2, 2)
    assert res.d == [1, 6]


def test_kernel_basis():
    ker = kernel_basis([[1, 2]], 1, 2)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] + 2 * v[1] == 0 and (abs(v[0]), abs(v[1])) == (2, 1)
    assert kernel_basis([[1, 0], [0, 1]], 2, 2) == []
    ker = kernel_basis([[0, 0]], 1, 2)
    assert len(ker) == 2


def test_lattice_basis():
    basis = lattice_basis([[2, 0], [3, 0]], 2)
    assert basis == [[1, 0]] or basis == [[-1, 0]]
    cols = [[2, 0], [0, 2], [1, 1]]
    basis = lattice_basis(cols, 2)
    assert len(basis) == 2
    bm = [[b[i] for b in basis] for i in range(2)]
    # mutual containment of the spans
    assert solve_many(bm, cols, 2, len(basis)) is not None
    cm = [[c[i] for c in cols] for i in range(2)]
    assert solve_many(cm, basis, 2, len(cols)) is not None
    # and the index is 2: (1,0) is not in the span
    assert solve_lattice(bm, [1, 0], 2, len(basis)) is None


def test_solve_lattice():
    assert solve_lattice([[2, 0], [0, 3]], [4, 9], 2, 2) == [2, 3]
    assert solve_lattice([[2, 0], [0, 3]], [1, 0], 2, 2) is None
    # 2-local solving allows odd denominators only
    x = solve_lattice([[3]], [1], 1, 1, two_local=True)
    assert x == [Fraction(1, 3)]
    assert solve_lattice([[2]], [1], 1, 1, two_local=True) is None
    x = solve_lattice([[6]], [2], 1, 1, two_local=True)
    assert x == [Fraction(1, 3)]


def test_random_matrices():
    rng = Random(1105)
    for _ in range(120):
        nrows = rng.randrange(0, 6)
        ncols = rng.randrange(0, 6)
        mat = [[rng.randrange(-9, 10) for _ in range(ncols)] for _ in range(nrows)]
        res = check_snf(mat, nrows, ncols)
        ker = kernel_basis(mat, nrows, ncols)
        for v in ker:
            for i in range(nrows):
                assert sum(mat[i][j] * v[j] for j in range(ncols)) == 0
        assert res.rank + len(ker) == ncols


def test_permutation_invariance_of_invariants():
    rng = Random(77)
    for _ in range(40):
        n = rng.randrange(1, 5)
        m = rng.randrange(1, 5)
        mat = [[rng.randrange(-6, 7) for _ in range(m)] for _ in range(n)]
        d1 = smith_normal_form(mat, n, m).d
        rows = list(range(n))
        cols = list(range(m))
        rng.shuffle(rows)
        rng.shuffle(cols)
        shuffled = [[mat[i][j] for j in cols] for i in rows]
        d2 = smith_normal_form(shuffled, n, m).d
        assert d1 == d2


def test_backends_agree():
    try:
        from slicealg.exact import _snfcore
    except ImportError:
        return
    from slicealg.exact import _snf_py

    rng = Random(40)
    for _ in range(60):
        n = rng.randrange(0, 5)
        m = rng.randrange(0, 5)
        mat = [[rng.randrange(-20, 21) for _ in range(m)] for _ in range(n)]
        assert _snfcore.snf_kernel(mat, n, m) == _snf_py.snf_kernel(
            [list(r) for r in mat], n, m
        )
