import random
from fractions import Fraction as F

import sympy

from algd.linalg import (
    column_space_basis,
    columns_matrix,
    extend_basis,
    identity,
    in_span,
    mat,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
    solve_affine,
)


def random_matrix(rng, rows, cols, density=0.7):
    return [
        [F(rng.randint(-5, 5), rng.randint(1, 3)) if rng.random() < density else F(0) for _ in range(cols)]
        for _ in range(rows)
    ]


def test_identity_and_rank():
    assert rank(identity(4)) == 4
    assert rank(mat([[1, 2], [2, 4]])) == 1
    assert rref(mat([[2, 4], [1, 2]]))[0] == mat([[1, 2], [0, 0]])


def test_known_kernel():
    a = mat([[1, 1, 0], [0, 0, 1]])
    ns = nullspace(a)
    assert ns == [[F(-1), F(1), F(0)]]
    assert mat_vec(a, ns[0]) == [F(0), F(0)]


def test_nullspace_of_zero_rows():
    assert nullspace([], ncols=2) == [[F(1), F(0)], [F(0), F(1)]]


def test_solve_consistent_and_inconsistent():
    a = mat([[1, 2], [3, 4]])
    x = solve(a, [F(5), F(11)])
    assert mat_vec(a, x) == [F(5), F(11)]
    bad = mat([[1, 1], [1, 1]])
    assert solve(bad, [F(0), F(1)]) is None
    part, ker = solve_affine(bad, [F(2), F(2)])
    assert mat_vec(bad, part) == [F(2), F(2)]
    assert len(ker) == 1


def test_column_space_and_extend():
    a = mat([[1, 2, 0], [2, 4, 1]])
    basis = column_space_basis(a)
    assert len(basis) == 2
    keep = extend_basis([[F(1), F(0)]], [[F(2), F(0)], [F(0), F(3)]], nrows=2)
    assert keep == [1]


def test_in_span():
    vs = [[F(1), F(0)], [F(1), F(1)]]
    coords = in_span(vs, [F(3), F(2)], 2)
    assert coords is not None
    assert mat_vec(columns_matrix(vs, 2), coords) == [F(3), F(2)]
    assert in_span([[F(1), F(0)]], [F(0), F(1)], 2) is None


def test_against_sympy_rank_and_nullity():
    rng = random.Random(7)
    for trial in range(25):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        a = random_matrix(rng, rows, cols)
        sm = sympy.Matrix([[sympy.Rational(x) for x in row] for row in a])
        assert rank(a) == sm.rank()
        ns = nullspace(a)
        assert len(ns) == cols - sm.rank()
        for v in ns:
            assert mat_vec(a, v) == [F(0)] * rows


def test_solutions_verified_by_substitution():
    rng = random.Random(11)
    for trial in range(25):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = random_matrix(rng, rows, cols)
        x0 = [F(rng.randint(-4, 4)) for _ in range(cols)]
        b = mat_vec(a, x0)
        x = solve(a, b)
        assert x is not None
        assert mat_vec(a, x) == b


def test_mat_mul_assoc():
    rng = random.Random(3)
    a = random_matrix(rng, 3, 4)
    b = random_matrix(rng, 4, 2)
    c = random_matrix(rng, 2, 5)
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))
