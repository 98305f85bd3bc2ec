import random
from fractions import Fraction

import pytest

from normsys import (
    NormalSystem,
    SignedBijection,
    find_isomorphisms,
    is_convex_positive_bijection,
    load_fixture,
    oracle_isomorphisms,
    validate_normal_system,
)
from conftest import random_normal_system, transformed_system


def frac(x):
    return Fraction(x)


def test_validity():
    good = NormalSystem(2, [[frac(1), frac(0)], [frac(0), frac(1)], [frac(1), frac(1)]])
    assert good.is_valid()
    assert validate_normal_system(good)
    parallel = NormalSystem(
        2, [[frac(1), frac(0)], [frac(2), frac(0)]], check=False
    )
    assert not parallel.is_valid()


def test_json_roundtrip():
    ns = load_fixture("U1").payload
    assert NormalSystem.from_json_dict(ns.to_json_dict()) == ns


def test_arrangement_roundtrip():
    # representatives may be rescaled by positive factors, so compare as
    # arrangements rather than raw vectors
    ns = load_fixture("U2").payload
    back = NormalSystem.from_arrangement(ns.to_arrangement())
    assert back.to_arrangement().points == ns.to_arrangement().points


def test_identity_is_always_a_witness():
    rng = random.Random(3)
    ns = random_normal_system(rng, 3, 5)
    ident = SignedBijection.identity(ns.labels)
    assert is_convex_positive_bijection(ident, ns, ns)
    assert is_convex_positive_bijection(ident.negate(), ns, ns)


def test_witness_sets_closed_under_negation():
    rng = random.Random(6)
    ns = random_normal_system(rng, 3, 5)
    ws = find_isomorphisms(ns, ns)
    keys = {w.key() for w in ws}
    assert keys == {w.negate().key() for w in ws}


def test_transformed_copies_are_isomorphic():
    rng = random.Random(12)
    for m, n in ((2, 4), (3, 5), (4, 6)):
        ns = random_normal_system(rng, m, n)
        other = transformed_system(rng, ns)
        assert find_isomorphisms(ns, other)


def test_find_matches_oracle_small():
    rng = random.Random(25)
    for m, n in ((1, 3), (2, 4), (3, 4), (3, 5)):
        a = random_normal_system(rng, m, n)
        b = transformed_system(rng, a)
        c = random_normal_system(rng, m, n)
        for x, y in ((a, b), (a, c), (a, a)):
            assert sorted(find_isomorphisms(x, y)) == sorted(
                oracle_isomorphisms(x, y)
            )


def test_worked_examples_not_isomorphic():
    u1 = load_fixture("U1").payload
    u2 = load_fixture("U2").payload
    assert find_isomorphisms(u1, u2) == []
    assert len(find_isomorphisms(u1, u1)) > 0


def test_mismatched_shapes_rejected():
    a = NormalSystem(2, [[frac(1), frac(0)], [frac(0), frac(1)]])
    b = NormalSystem(2, [[frac(1), frac(0)], [frac(0), frac(1)], [frac(1), frac(1)]])
    with pytest.raises(ValueError):
        find_isomorphisms(a, b)


def test_oracle_size_guard():
    rng = random.Random(31)
    big = random_normal_system(rng, 2, 8)
    with pytest.raises(ValueError):
        oracle_isomorphisms(big, big)
