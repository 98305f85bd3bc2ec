import random
from fractions import Fraction

import pytest

from normsys import (
    AntipodalArrangement,
    LineCycle,
    SpherePoint,
    all_cycle_invariants,
    line_cycle,
    load_fixture,
    standard_arrangement,
)
from normsys.symbols import STANDARD_DICTIONARY
from conftest import random_sphere_arrangement


def test_cycle_canonical_rotation():
    assert LineCycle([2, 4, 6, 5, 3]) == LineCycle([5, 3, 2, 4, 6])
    assert LineCycle([2, 4, 6, 5, 3]) != LineCycle([2, 4, 6, 3, 5])
    assert hash(LineCycle([1, 2, 3])) == hash(LineCycle([3, 1, 2]))


def test_cycle_inverse_and_conjugate():
    c = LineCycle([1, 2, 3, 4])
    assert c.inverse() == LineCycle([4, 3, 2, 1])
    assert c.inverse().inverse() == c
    assert c.conjugate({1: 5, 2: 6, 3: 7, 4: 8}) == LineCycle([5, 6, 7, 8])


def test_cycle_rejects_duplicates():
    with pytest.raises(ValueError):
        LineCycle([1, 2, 2])


def test_standard_dictionary_is_computed():
    arr = standard_arrangement()
    for (j, s), triple in STANDARD_DICTIONARY.items():
        assert line_cycle(arr, j, positive=(s > 0)) == LineCycle(triple)


def test_antipodal_cycles_are_inverse():
    rng = random.Random(2)
    for _ in range(5):
        arr = random_sphere_arrangement(rng, 2, 5)
        for j in arr.labels:
            pos = line_cycle(arr, j, positive=True)
            neg = line_cycle(arr, j, positive=False)
            assert neg == pos.inverse()


def test_cycles_invariant_under_rescaling():
    rng = random.Random(8)
    arr = random_sphere_arrangement(rng, 2, 5)
    scaled = AntipodalArrangement(
        2,
        {
            i: SpherePoint([Fraction(rng.randint(1, 9)) * x for x in p.rep])
            for i, p in arr.points.items()
        },
    )
    assert all_cycle_invariants(arr) == all_cycle_invariants(scaled)


def test_total_flip_swaps_signs():
    rng = random.Random(14)
    arr = random_sphere_arrangement(rng, 2, 5)
    flipped = arr.flip_all()
    for j in arr.labels:
        assert line_cycle(flipped, j, positive=True) == line_cycle(
            arr, j, positive=False
        )


def test_relabeling_conjugates_cycles():
    rng = random.Random(21)
    arr = random_sphere_arrangement(rng, 2, 5)
    mapping = {1: 3, 2: 5, 3: 1, 4: 2, 5: 4}
    relabeled = arr.relabel(mapping)
    for j in arr.labels:
        assert line_cycle(relabeled, mapping[j], positive=True) == line_cycle(
            arr, j, positive=True
        ).conjugate(mapping)


def test_worked_example_tables():
    for fid in ("U1", "U2"):
        ns = load_fixture(fid).payload
        arr = ns.to_arrangement()
        stored = load_fixture(f"{fid}-cycles").payload
        assert len(stored) == 12
        for (j, s), cyc in stored.items():
            assert line_cycle(arr, j, positive=(s > 0)) == cyc
