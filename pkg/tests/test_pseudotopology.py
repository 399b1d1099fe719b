import itertools

import pytest

from plausible.formula import And, Atom, Bottom, Iff, Not, Or, parse
from plausible.pseudotopology import (MAX_UNIVERSE, PseudoTopology,
                                      check_valuation_constraints,
                                      enumerate_spaces, pairwise_nondisjoint,
                                      principal_space, validate)

# [DERIVED] counts pinned against the brute force below (sizes 1..3) and
# frozen for size 4
SPACE_COUNTS = {1: 1, 2: 3, 3: 16, 4: 145}


def space(universe_size, opens):
    return PseudoTopology(universe_size, frozenset(opens))


def test_validate_examples():
    assert validate(space(2, [3]))
    assert validate(space(2, [1, 3]))
    v = validate(space(2, [1, 2, 3]))
    assert not v.ok and v.axiom == "E1"
    v = validate(space(2, [1]))
    assert not v.ok and v.axiom == "E3"
    v = validate(space(2, [0, 3]))
    assert not v.ok and v.axiom == "E4"
    with pytest.raises(ValueError):
        validate(space(1, [2]))


def test_validate_catches_missing_union():
    # intersections fine, union 7 of 3 and 5 missing
    v = validate(space(3, [1, 3, 5, 7]))
    assert v.ok
    v = validate(space(4, [1, 3, 5, 15]))
    assert not v.ok and v.axiom == "E2" and set(v.witness) == {3, 5}


def test_counts_are_pinned():
    for size, count in SPACE_COUNTS.items():
        assert sum(1 for _ in enumerate_spaces(size)) == count


def test_enumeration_matches_brute_force():
    for size in (1, 2, 3):
        full = (1 << size) - 1
        masks = range(1, full + 1)
        expected = set()
        for r in range(len(list(masks)) + 1):
            for combo in itertools.combinations(masks, r):
                cand = space(size, combo)
                if validate(cand):
                    expected.add(cand.opens)
        got = [s.opens for s in enumerate_spaces(size)]
        assert len(got) == len(set(got))
        assert set(got) == expected


def test_size_two_families():
    families = sorted(sorted(s.opens) for s in enumerate_spaces(2))
    assert families == [[1, 3], [2, 3], [3]]


def test_enumeration_rejects_oversized_request():
    with pytest.raises(ValueError):
        list(enumerate_spaces(MAX_UNIVERSE + 1))


def test_all_enumerated_spaces_validate():
    for size in range(1, MAX_UNIVERSE + 1):
        for s in enumerate_spaces(size):
            assert validate(s)


def test_pairwise_nondisjoint_theorem():
    for size in range(1, MAX_UNIVERSE + 1):
        for s in enumerate_spaces(size):
            assert pairwise_nondisjoint(s)
    assert not pairwise_nondisjoint(space(2, [1, 2, 3]))


def test_no_space_holds_two_disjoint_singletons():
    for s in enumerate_spaces(3):
        singletons = [m for m in s.opens if bin(m).count("1") == 1]
        assert len(singletons) <= 1


def test_principal_spaces():
    s = principal_space(3, 0)
    assert validate(s)
    assert s.opens == frozenset([1, 3, 5, 7])
    for size in range(1, MAX_UNIVERSE + 1):
        for point in range(size):
            assert validate(principal_space(size, point))


def test_json_round_trip():
    for s in enumerate_spaces(3):
        assert PseudoTopology.from_json(s.to_json()) == s
    doc = space(2, [1, 3]).to_json()
    assert doc == {"universe_size": 2, "opens": [1, 3]}


def test_valuation_constraints():
    p, q = Atom("p"), Atom("q")
    s = space(2, [1, 3])
    taut = parse("p | ~p")
    good = {p: 1, q: 3, And(p, q): 1, Or(p, q): 3, taut: 3, Bottom(): 0}
    formulas = [p, q, And(p, q), Or(p, q), taut, Bottom()]
    assert check_valuation_constraints(s, good, formulas)

    bad_taut = dict(good)
    bad_taut[taut] = 1
    v = check_valuation_constraints(s, bad_taut, formulas)
    assert not v.ok and v.axiom == "tautology"

    bad_conj = dict(good)
    bad_conj[And(p, q)] = 2
    v = check_valuation_constraints(s, bad_conj, formulas)
    assert not v.ok and v.axiom == "conjunction"

    bad_disj = {p: 1, q: 2, Or(p, q): 2, And(p, q): 0}
    v = check_valuation_constraints(s, bad_disj,
                                    [p, q, Or(p, q), And(p, q)])
    assert not v.ok and v.axiom == "disjunction"

    bad_falsum = dict(good)
    bad_falsum[Bottom()] = 1
    v = check_valuation_constraints(s, bad_falsum, formulas)
    assert not v.ok and v.axiom == "falsum"

    split = {p: 1, Not(Not(p)): 2}
    v = check_valuation_constraints(s, split, [p, Not(Not(p))])
    assert not v.ok and v.axiom == "equivalence"

    with pytest.raises(ValueError):
        check_valuation_constraints(s, {}, [p])
