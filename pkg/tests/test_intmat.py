import random

from fanforge.intmat import (
    det,
    hermite_normal_form,
    hnf_rows,
    identity,
    integer_kernel_basis,
    lattices_equal,
    mat_mul,
    smith_invariants,
    solve_rational,
    transpose,
)

from conftest import BH_Q_ROWS, BH_V_ROWS, X47_Q_ROWS, X47_V_ROWS


def test_hnf_identity():
    H, U = hermite_normal_form(identity(2))
    assert H == identity(2)
    assert U == identity(2)


def test_hnf_small_matrix():
    A = [[2, 4], [1, 3]]
    H, U = hermite_normal_form(A)
    assert mat_mul(U, A) == H
    assert abs(det(U)) == 1
    # upper triangular with positive pivots and reduced entries above
    assert H[1][0] == 0
    assert H[0][0] > 0 and H[1][1] > 0
    assert 0 <= H[0][1] < H[1][1]


def test_hnf_idempotent():
    rng = random.Random(5)
    for _ in range(25):
        A = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(3)]
        H, _ = hermite_normal_form(A)
        H2, _ = hermite_normal_form(H)
        assert H2 == H


def test_hnf_unimodular_random():
    rng = random.Random(11)
    for _ in range(25):
        A = [[rng.randint(-6, 6) for _ in range(3)] for _ in range(4)]
        H, U = hermite_normal_form(A)
        assert mat_mul(U, A) == H
        assert abs(det(U)) == 1


def test_kernel_projective_plane():
    assert integer_kernel_basis([[1, 0, -1], [0, 1, -1]]) == ((1, 1, 1),)


def test_kernel_matches_printed_weight_matrices():
    assert lattices_equal(integer_kernel_basis(BH_V_ROWS), BH_Q_ROWS)
    K = integer_kernel_basis(X47_V_ROWS)
    assert len(K) == 3
    assert lattices_equal(K, X47_Q_ROWS)


def test_kernel_orthogonality_and_saturation():
    rng = random.Random(23)
    for _ in range(30):
        rows = rng.randint(1, 3)
        cols = rng.randint(rows + 1, 6)
        A = [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        K = integer_kernel_basis(A)
        if not K:
            continue
        assert mat_mul(K, transpose(A)) == [[0] * rows for _ in K]
        assert all(d == 1 for d in smith_invariants([list(r) for r in K]))


def test_smith_invariants():
    assert smith_invariants(identity(3)) == (1, 1, 1)
    assert smith_invariants([[2, 0], [0, 6]]) == (2, 6)
    assert smith_invariants(BH_V_ROWS) == (1, 1, 1)
    assert smith_invariants([[2, 4], [4, 2]]) == (2, 6)


def test_smith_divisibility_random():
    rng = random.Random(37)
    for _ in range(30):
        A = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        d = smith_invariants(A)
        for a, b in zip(d, d[1:]):
            assert b % a == 0


def test_solve_identity():
    assert solve_rational(identity(3), [4, 5, 6]) == (4, 5, 6)


def test_solve_back_substitution():
    assert solve_rational([[1, 1], [0, 1]], [3, 1]) == (2, 1)


def test_solve_inconsistent():
    assert solve_rational([[1, 1], [1, 1]], [0, 1]) is None


def test_solve_underdetermined():
    A = [[1, 2, 3]]
    x = solve_rational(A, [6])
    assert sum(a * v for a, v in zip(A[0], x)) == 6


def test_hnf_canonical_for_row_lattice():
    # row-equivalent inputs with the same row lattice produce identical forms
    A = [[1, 2, 3], [0, 1, 5]]
    B = [[1, 3, 8], [0, 1, 5], [1, 2, 3]]
    assert hnf_rows(A) == hnf_rows(B)
