import itertools

import pytest

from subrank import MatrixGF, kernel_basis, rank, rref, solve_affine
from subrank.gf import PrimeField
from subrank.linalg import ShapeMismatchError

GF2 = PrimeField(2)


def test_rref_identity():
    M = MatrixGF.make(GF2, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    reduced, rk, pivots = rref(M)
    assert reduced == M and rk == 3 and pivots == (0, 1, 2)


def test_rref_rank_deficient():
    M = MatrixGF.make(GF2, [[1, 1], [1, 1]])
    reduced, rk, pivots = rref(M)
    assert rk == 1 and pivots == (0,)
    assert reduced.rows == ((1, 1), (0, 0))


def test_rref_idempotent(rng):
    for _ in range(50):
        rows = [[rng.randrange(2) for _ in range(5)] for _ in range(3)]
        M = MatrixGF.make(GF2, rows)
        once = rref(M)[0]
        assert rref(once)[0] == once


def test_rank_nullity_and_kernel_substitution(rng):
    for _ in range(50):
        rows = [[rng.randrange(2) for _ in range(5)] for _ in range(3)]
        M = MatrixGF.make(GF2, rows)
        rk = rank(M)
        ker = kernel_basis(M)
        assert rk + ker.nrows == 5
        for v in ker.rows:
            assert all(x == 0 for x in M.mul_vec(v))
        # kernel rows are independent
        assert rank(ker) == ker.nrows if ker.rows else True


def test_kernel_over_extension_field(gf16, rng):
    rows = [[rng.randrange(16) for _ in range(4)] for _ in range(2)]
    M = MatrixGF.make(gf16, rows)
    for v in kernel_basis(M).rows:
        assert all(x == 0 for x in M.mul_vec(v))


def test_solve_affine_identity():
    A = MatrixGF.make(GF2, [[1, 0], [0, 1]])
    sol = solve_affine(A, [1, 0])
    assert sol.particular == (1, 0)
    assert sol.kernel == ()


def test_solve_affine_zero_matrix():
    A = MatrixGF.make(GF2, [[0, 0, 0]])
    sol = solve_affine(A, [0])
    assert sol.particular == (0, 0, 0)
    assert sol.dimension == 3


def test_solve_affine_infeasible():
    A = MatrixGF.make(GF2, [[0, 0]])
    assert solve_affine(A, [1]) is None


def test_solve_affine_enumeration_oracle(rng):
    for _ in range(30):
        rows = [[rng.randrange(2) for _ in range(4)] for _ in range(3)]
        x_true = [rng.randrange(2) for _ in range(4)]
        A = MatrixGF.make(GF2, rows)
        b = A.mul_vec(x_true)         # consistent by construction
        sol = solve_affine(A, b)
        assert sol is not None
        solutions = set()
        for coeffs in itertools.product([0, 1], repeat=sol.dimension):
            x = list(sol.particular)
            for c, kv in zip(coeffs, sol.kernel):
                if c:
                    x = [GF2.add(xi, ki) for xi, ki in zip(x, kv)]
            solutions.add(tuple(x))
            assert A.mul_vec(x) == b
        # brute force: the affine set is exactly everything solving Ax=b
        brute = {x for x in itertools.product([0, 1], repeat=4)
                 if A.mul_vec(list(x)) == b}
        assert solutions == brute


def test_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        MatrixGF.make(GF2, [[1, 0], [1]])
    with pytest.raises(ShapeMismatchError):
        solve_affine(MatrixGF.make(GF2, [[1, 0]]), [1, 1])
