import random

import pytest

from normsys import (
    LineCycle,
    SignedBijection,
    Symbol,
    all_orbits,
    all_symbols,
    automorphisms,
    compatible_symbols,
    line_cycle,
    load_fixture,
    match_to_standard,
    orbit,
    standard_arrangement,
)
from normsys.symbols import act, act_word, all_signed_bijections

GENERATORS = ("12", "23", "34", "14")


def test_symbol_parse_roundtrip():
    for text in ("4->(2,1,3)", "-4->(-2,-3,-1)", "1->(2,-4,3)"):
        assert str(Symbol.parse(text)) == text


def test_symbol_rejects_head_in_triple():
    with pytest.raises(ValueError):
        Symbol(4, (2, -4, 3))


def test_symbol_count():
    syms = all_symbols()
    assert len(syms) == 384
    assert len(set(syms)) == 384


def test_generators_are_involutions():
    s = Symbol.parse("4->(2,1,3)")
    for g in GENERATORS:
        assert act(g, act(g, s)) == s


def test_braid_and_commutation_relations():
    s = Symbol.parse("-3->(1,-2,4)")
    # adjacent transpositions braid, distant ones commute
    assert act_word(["12", "23", "12"], s) == act_word(["23", "12", "23"], s)
    assert act_word(["12", "34"], s) == act_word(["34", "12"], s)


def test_orbits_partition_into_16_of_size_24():
    orbits = all_orbits()
    assert len(orbits) == 16
    assert all(len(o) == 24 for o in orbits)
    assert sum(len(o) for o in orbits) == 384


def test_action_is_free():
    # every orbit has the full group size, so no symbol has a stabilizer
    for o in all_orbits():
        assert len(o) == 24


def test_compatible_symbols_form_one_orbit():
    arr = standard_arrangement()
    syms = compatible_symbols(arr)
    assert len(syms) == 24
    assert orbit(next(iter(syms))) == syms
    assert syms == load_fixture("S4-symbols").payload


def test_signed_bijections_count_and_group():
    bs = all_signed_bijections((1, 2, 3))
    assert len(bs) == 48
    ident = SignedBijection.identity((1, 2, 3))
    assert any(b == ident for b in bs)
    b = bs[7]
    assert b.negate().negate() == b
    assert b.compose(SignedBijection.identity((1, 2, 3))) == b


def test_automorphism_group_of_standard():
    auts = automorphisms(standard_arrangement())
    assert len(auts) == 48
    keys = {a.key() for a in auts}
    ident = SignedBijection.identity((1, 2, 3, 4))
    assert ident.key() in keys
    rng = random.Random(1)
    for _ in range(30):
        a, b = rng.choice(auts), rng.choice(auts)
        assert a.compose(b).key() in keys


def test_match_to_standard_accepts_standard_cycles():
    arr = standard_arrangement()
    cycle_map = {
        (j, s): line_cycle(arr, j, positive=(s > 0))
        for j in arr.labels
        for s in (1, -1)
    }
    matches = match_to_standard(cycle_map)
    assert len(matches) == 24
    keys = {m.key() for m in matches}
    assert SignedBijection.identity((1, 2, 3, 4)).key() in keys
    # one representative per negation pair; closing up gives the full
    # automorphism group
    closed = keys | {m.negate().key() for m in matches}
    assert closed == {a.key() for a in automorphisms(standard_arrangement())}
