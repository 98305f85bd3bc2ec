"""Shared random generators for the test suite.

Everything is seeded explicitly by the caller so runs are reproducible.
"""

import random
from fractions import Fraction

from normsys import (
    AntipodalArrangement,
    HyperplaneArrangement,
    Matrix,
    NormalSystem,
    det,
    sign,
)
from normsys.linalg import solve


def random_fraction(rng: random.Random, lo=-5, hi=5, max_den=3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_normal_system(rng: random.Random, m: int, n: int) -> NormalSystem:
    while True:
        vecs = [[random_fraction(rng) for _ in range(m)] for _ in range(n)]
        if any(not any(v) for v in vecs):
            continue
        ns = NormalSystem(m, vecs, check=False)
        if ns.is_valid():
            return ns


def random_arrangement(rng: random.Random, m: int, n: int) -> HyperplaneArrangement:
    while True:
        coeffs = [[Fraction(rng.randint(-4, 4)) for _ in range(m)] for _ in range(n)]
        constants = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        if any(not any(r) for r in coeffs):
            continue
        ha = HyperplaneArrangement(m, coeffs, constants, check=False)
        if ha.is_valid():
            return ha


def random_sphere_arrangement(
    rng: random.Random, k: int, n: int
) -> AntipodalArrangement:
    while True:
        vecs = [
            [random_fraction(rng) for _ in range(k + 1)] for _ in range(n)
        ]
        if any(not any(v) for v in vecs):
            continue
        arr = AntipodalArrangement.from_vectors(k, vecs, check=False)
        ok, _ = arr.general_position()
        if ok:
            return arr


def random_invertible(rng: random.Random, m: int) -> Matrix:
    while True:
        mat = Matrix(
            [[Fraction(rng.randint(-3, 3)) for _ in range(m)] for _ in range(m)]
        )
        if sign(det(mat)) != 0:
            return mat


def transformed_system(rng: random.Random, ns: NormalSystem) -> NormalSystem:
    """An isomorphic copy: relabel, flip signs, and apply an invertible
    linear map (linear maps preserve all linear dependencies exactly)."""
    mat = random_invertible(rng, ns.m)
    labels = list(ns.labels)
    images = labels[:]
    rng.shuffle(images)
    vecs = [None] * ns.n
    for i, j in zip(labels, images):
        mu = rng.choice((1, -1))
        w = mat.apply(ns.vector(i))
        vecs[j - 1] = [mu * x for x in w]
    return NormalSystem(ns.m, vecs)


def vertex_of(ha: HyperplaneArrangement, subset) -> tuple:
    a = Matrix([ha.row(i) for i in subset])
    return solve(a, [ha.constant(i) for i in subset])


def random_simplex_arrangement(rng: random.Random, m: int) -> HyperplaneArrangement:
    """m+1 hyperplanes bounding a simplex, normals pointing away from the
    opposite vertex."""
    from normsys.linalg import kernel_basis

    while True:
        verts = [
            [random_fraction(rng, -6, 6) for _ in range(m)] for _ in range(m + 1)
        ]
        aff = Matrix([[Fraction(1)] + v for v in verts])
        if sign(det(aff)) == 0:
            continue
        coeffs, constants = [], []
        ok = True
        for i, opposite in enumerate(verts):
            rest = [v for j, v in enumerate(verts) if j != i]
            ker = kernel_basis(Matrix([list(v) + [Fraction(-1)] for v in rest]))
            if len(ker) != 1:
                ok = False
                break
            a, c = list(ker[0][:m]), ker[0][m]
            val = sum(x * y for x, y in zip(a, opposite)) - c
            if sign(val) == 0:
                ok = False
                break
            if sign(val) > 0:
                a, c = [-x for x in a], -c
            coeffs.append(a)
            constants.append(c)
        if not ok:
            continue
        ha = HyperplaneArrangement(m, coeffs, constants, check=False)
        if ha.is_valid():
            return ha
