import random
from fractions import Fraction

import pytest

from smckit import linalg


def F(x):
    return Fraction(x)


def test_rref_pivots():
    a = [[F(1), F(2), F(3)], [F(2), F(4), F(7)]]
    r, pivots = linalg.rref(a)
    assert pivots == [0, 2]
    assert r == [[F(1), F(2), F(0)], [F(0), F(0), F(1)]]


def test_rank_and_nullspace():
    a = [[F(1), F(2)], [F(2), F(4)]]
    assert linalg.rank(a) == 1
    ns = linalg.nullspace(a, 2)
    assert len(ns) == 1
    v = ns[0]
    assert v[0] * F(1) + v[1] * F(2) == 0


def test_solve_consistent_and_inconsistent():
    a = [[F(1), F(1)], [F(0), F(1)]]
    x = linalg.solve(a, [F(3), F(1)], 2)
    assert x == [F(2), F(1)]
    b = [[F(1), F(1)], [F(2), F(2)]]
    assert linalg.solve(b, [F(1), F(3)], 2) is None


def test_inverse_exact():
    a = [[F(2), F(1)], [F(1), F(1)]]
    inv = linalg.inverse(a)
    assert linalg.mat_mul(a, inv) == linalg.identity(2)
    assert linalg.inverse([[F(1), F(2)], [F(2), F(4)]]) is None


def test_inverse_fractions_survive():
    a = [[Fraction(1, 2), F(0)], [F(0), Fraction(3, 7)]]
    inv = linalg.inverse(a)
    assert inv == [[F(2), F(0)], [F(0), Fraction(7, 3)]]


def test_block_and_stack_helpers():
    a = [[F(1)]]
    b = [[F(2), F(3)]]
    assert linalg.hstack([a, b], 1) == [[F(1), F(2), F(3)]]
    assert linalg.vstack([[[F(1), F(2)]], [[F(3), F(4)]]]) == [[F(1), F(2)], [F(3), F(4)]]
    bd = linalg.block_diag([(a, 1, 1), (b, 1, 2)])
    assert bd == [[F(1), F(0), F(0)], [F(0), F(2), F(3)]]


def test_mat_mul_shapes():
    a = [[F(1), F(2)]]
    b = [[F(3)], [F(4)]]
    assert linalg.mat_mul(a, b) == [[F(11)]]
    # empty inner dimension needs the explicit hint
    assert linalg.mat_mul([], [], inner=0) == []


@pytest.mark.parametrize("p", [2, 3, 5])
def test_fp_rank_matches_rational_rank_generically(p):
    rng = random.Random(11)
    for _ in range(25):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randint(0, 1) for _ in range(n)] for _ in range(m)]
        aq = [[F(x) for x in row] for row in a]
        # 0/1 matrices: the F_p rank can only drop below the rational rank
        assert linalg.fp_rank(a, n, p) <= linalg.rank(aq)
        assert linalg.fp_rank(a, n, p) + linalg.fp_nullity(a, n, p) == n


def test_solve_random_roundtrip():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        x = [F(rng.randint(-3, 3)) for _ in range(n)]
        b = linalg.mat_vec(a, x)
        got = linalg.solve(a, b, n)
        assert got is not None
        assert linalg.mat_vec(a, got) == b
