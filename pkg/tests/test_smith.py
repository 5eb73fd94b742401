"""
Smith 标准形：与 sympy 对照、幺模性、余核描述
"""

import random

import pytest
from sympy import Matrix
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DM
from sympy.polys.matrices.normalforms import invariant_factors

from core.algebra.smith import int_matmul, integer_det, smith_normal_form


def diag_matrix(diagonal, nrows, ncols):
    return [[diagonal[i] if i == j else 0 for j in range(ncols)] for i in range(nrows)]


def test_known_example():
    m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    snf = smith_normal_form(m)
    assert snf.diagonal == (1, 10, 30, 0)
    assert snf.rank == 3
    assert snf.cokernel == (10, 30, 0)
    assert snf.describe() == "Z/10 + Z/30 + Z"
    assert snf.cokernel_order == 0


def test_transform_reproduces_diagonal():
    rng = random.Random("smith")
    for _ in range(10):
        n = rng.randint(2, 6)
        m = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        snf = smith_normal_form(m)
        assert int_matmul(int_matmul(snf.left, m), snf.right) == diag_matrix(snf.diagonal, n, n)
        assert abs(integer_det(snf.left)) == 1
        assert abs(integer_det(snf.right)) == 1
        assert all(d >= 0 for d in snf.diagonal)


def test_matches_sympy_invariant_factors():
    rng = random.Random("smith-sympy")
    for _ in range(10):
        m = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        if not Matrix(m).det():
            continue
        expected = sorted(abs(int(x)) for x in invariant_factors(DM(m, ZZ)))
        assert sorted(smith_normal_form(m).invariant_factors) == expected


def test_cokernel_order_is_abs_det():
    rng = random.Random("smith-det")
    for _ in range(10):
        m = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        d = integer_det(m)
        if d:
            assert smith_normal_form(m).cokernel_order == abs(d)


@pytest.mark.parametrize("size,expected", [
    (11, (2,) * 9 + (26,)),
    (12, (2,) * 10 + (28,)),
])
def test_plane_class_cokernel(size, expected):
    gram = [[3 if i == j else 1 for j in range(size)] for i in range(size)]
    snf = smith_normal_form(gram)
    assert snf.cokernel == expected
    assert snf.cokernel_order == abs(integer_det(gram))


def test_rectangular_matrix():
    snf = smith_normal_form([[2, 4, 6], [4, 8, 12]])
    assert snf.diagonal == (2, 0)
    assert snf.rank == 1


def test_unimodular_has_trivial_cokernel():
    snf = smith_normal_form([[2, 1], [1, 1]])
    assert snf.cokernel == ()
    assert snf.describe() == "0"
    assert snf.cokernel_order == 1


def test_integer_det():
    assert integer_det([[3, 1], [1, 3]]) == 8
    assert integer_det([[0, 1], [1, 0]]) == -1
