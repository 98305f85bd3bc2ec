import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from normsys import Matrix, det, kernel_basis, rank
from normsys.linalg import ProjectorPair, inverse, projectors, solve

entries = st.fractions(min_value=-20, max_value=20, max_denominator=5)


def square(n):
    return st.lists(
        st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(Matrix)


def test_det_basics():
    assert det(Matrix.identity(3)) == 1
    assert det(Matrix([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]])) == -1


def test_det_non_square():
    with pytest.raises(ValueError):
        det(Matrix([[Fraction(1), Fraction(2)]]))


def test_det_row_swap_antisymmetry():
    a = Matrix([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(5)]])
    b = Matrix([[Fraction(3), Fraction(5)], [Fraction(1), Fraction(2)]])
    assert det(a) == -det(b) == -1


@settings(max_examples=60)
@given(square(3), square(3))
def test_det_multiplicative(a, b):
    assert det(a * b) == det(a) * det(b)


@settings(max_examples=60)
@given(square(3))
def test_det_transpose(a):
    assert det(a) == det(a.transpose())


@settings(max_examples=60)
@given(square(3))
def test_rank_and_kernel_dimensions(a):
    r = rank(a)
    ker = kernel_basis(a)
    assert r + len(ker) == 3
    for v in ker:
        assert all(sum(a[i, j] * v[j] for j in range(3)) == 0 for i in range(3))


@settings(max_examples=60)
@given(square(3), st.lists(entries, min_size=3, max_size=3))
def test_solve_verifies(a, b):
    if det(a) == 0:
        return
    x = solve(a, b)
    for i in range(3):
        assert sum(a[i, j] * x[j] for j in range(3)) == b[i]


def test_inverse():
    rng = random.Random(5)
    for _ in range(20):
        while True:
            a = Matrix(
                [[Fraction(rng.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
            )
            if det(a) != 0:
                break
        assert a * inverse(a) == Matrix.identity(3)


def test_projector_identities():
    rng = random.Random(11)
    for _ in range(20):
        rows = [
            [Fraction(rng.randint(-4, 4)) for _ in range(4)] for _ in range(2)
        ]
        if rank(Matrix(rows)) < 2:
            continue
        pq = projectors(Matrix(rows))
        ident = Matrix.identity(4)
        assert pq.p + pq.q == ident
        assert pq.p * pq.p == pq.p
        assert pq.q * pq.q == pq.q
        assert pq.p.transpose() == pq.p
        assert pq.q.transpose() == pq.q
        # P fixes the span, Q annihilates it
        for r in rows:
            assert pq.p.apply(r) == tuple(r)
            assert pq.q.apply(r) == (Fraction(0),) * 4
