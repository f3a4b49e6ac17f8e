import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from levelone import SingularMatrix
from levelone.linalg import (
    char_poly,
    mat_det,
    mat_identity,
    mat_inverse,
    mat_mul,
    nullspace,
    rank,
    rref,
)

from conftest import invertible_matrices


def test_rref_is_canonical():
    rows = [[F(2), F(4), F(0)], [F(1), F(2), F(1)]]
    got, pivots = rref(rows)
    assert got == [[F(1), F(2), F(0)], [F(0), F(0), F(1)]]
    assert pivots == [0, 2]


def test_rref_equal_row_spaces_agree():
    rows_a = [[F(1), F(1)], [F(0), F(1)]]
    rows_b = [[F(2), F(3)], [F(5), F(4)]]
    assert rref(rows_a)[0] == rref(rows_b)[0]


@given(invertible_matrices(4))
@settings(max_examples=40)
def test_inverse_round_trip(m):
    assert mat_mul(m, mat_inverse(m)) == mat_identity(4)


def test_singular_matrix_raises():
    with pytest.raises(SingularMatrix):
        mat_inverse([[F(1), F(2)], [F(2), F(4)]])
    assert mat_det([[F(1), F(2)], [F(2), F(4)]]) == 0


@given(invertible_matrices(3), invertible_matrices(3))
@settings(max_examples=40)
def test_det_is_multiplicative(a, b):
    assert mat_det(mat_mul(a, b)) == mat_det(a) * mat_det(b)


def test_nullspace_of_rank_one():
    rows = [[F(1), F(2), F(3)]]
    basis = nullspace(rows)
    assert len(basis) == 2
    for v in basis:
        assert sum(c * x for c, x in zip(rows[0], v)) == 0
    assert rank([list(v) for v in basis]) == 2


def test_char_poly_diagonal():
    m = [[F(2), F(0)], [F(0), F(3)]]
    # (x - 2)(x - 3) = x^2 - 5x + 6
    assert char_poly(m) == {2: F(1), 1: F(-5), 0: F(6)}


@given(st.integers(0, 2**32))
def test_char_poly_matches_det_of_shift(seed):
    """Oracle: p(c) = det(c*I - m) for a handful of rational points c."""
    from levelone import random_invertible_matrix
    from levelone.poly import poly_eval

    m = random_invertible_matrix(4, random.Random(seed))
    p = char_poly(m)
    for c in (F(0), F(1), F(-2), F(1, 3)):
        shifted = [
            [(c if i == j else F(0)) - m[i][j] for j in range(4)] for i in range(4)
        ]
        assert poly_eval(p, c) == mat_det(shifted)
