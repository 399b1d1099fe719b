import pytest

from plausible.folp import (App, Eq, Exists, FImplies, FNot, FOr, Forall,
                            Name, Plaus, PlausibleStructure, Rel,
                            check_axioms, free_names, parse_fo, render_fo,
                            rename_bound, satisfies)
from plausible.pseudotopology import PseudoTopology, principal_space


def structure(domain_size, opens, relations=None, functions=None,
              constants=None):
    return PlausibleStructure(
        domain_size=domain_size,
        relations={n: frozenset(tuple(t) for t in table)
                   for n, table in (relations or {}).items()},
        functions={n: {tuple(k): v for k, v in graph}
                   for n, graph in (functions or {}).items()},
        constants=constants or {},
        omega=PseudoTopology(domain_size, frozenset(opens)),
    )


@pytest.fixture
def M():
    # three points, opens are the sets containing point 2
    return structure(
        3, [4, 5, 6, 7],
        relations={"R": [(1,), (2,)], "Less": [(0, 1), (0, 2), (1, 2)]},
        functions={"s": [((0,), 1), ((1,), 2), ((2,), 2)]},
        constants={"c": 0},
    )


def test_parse_fo_examples():
    f = parse_fo("P x. R(x)")
    assert f == Plaus("x", Rel("R", (Name("x"),)))
    assert parse_fo("forall x. R(x) -> R(x)") == \
        Forall("x", FImplies(Rel("R", (Name("x"),)), Rel("R", (Name("x"),))))
    assert parse_fo("(forall x. R(x)) -> R(c)") == \
        FImplies(Forall("x", Rel("R", (Name("x"),))), Rel("R", (Name("c"),)))
    assert parse_fo("s(x) = c") == Eq(App("s", (Name("x"),)), Name("c"))
    assert parse_fo("~P x. R(x)") == FNot(Plaus("x", Rel("R", (Name("x"),))))
    with pytest.raises(ValueError):
        parse_fo("forall x R(x)")


def test_quantifiers_scope_maximally():
    f = parse_fo("P x. R(x) | Q(x)")
    assert isinstance(f, Plaus)
    assert isinstance(f.body, FOr)


def test_p_is_only_a_quantifier_before_a_dot():
    f = parse_fo("P(x)")
    assert f == Rel("P", (Name("x"),))
    g = parse_fo("P x. P(x)")
    assert g == Plaus("x", Rel("P", (Name("x"),)))


def test_render_round_trip():
    for text in ["P x. R(x) | Q(x)", "(forall x. R(x)) -> R(c)",
                 "s(x) = c", "~(R(x) & Q(y))", "exists y. Less(c, y)",
                 "forall x. exists y. Less(x, y)"]:
        f = parse_fo(text)
        assert parse_fo(render_fo(f)) == f


def test_free_names_and_rename():
    f = parse_fo("forall x. Less(x, y)")
    assert free_names(f) == {"y"}
    g = rename_bound(f.body, "y", "z")
    assert g == parse_fo("Less(x, z)")
    assert rename_bound(f, "x", "z") == f


def test_satisfies_basics(M):
    assert satisfies(M, parse_fo("R(x)"), {"x": 1})
    assert not satisfies(M, parse_fo("R(x)"), {"x": 0})
    assert satisfies(M, parse_fo("exists x. R(x)"))
    assert not satisfies(M, parse_fo("forall x. R(x)"))
    assert satisfies(M, parse_fo("forall x. Less(c, s(x)) | x = c"))
    assert satisfies(M, parse_fo("s(s(c)) = s(s(s(c)))"))


def test_plausibility_quantifier_reads_the_opens(M):
    # R defines {1, 2}, mask 6, which is open
    assert satisfies(M, parse_fo("P x. R(x)"))
    # x = c defines {0}, mask 1, not open
    assert not satisfies(M, parse_fo("P x. x = c"))
    # the full domain is always open
    assert satisfies(M, parse_fo("P x. x = x"))


def test_unbound_name_raises(M):
    with pytest.raises(ValueError):
        satisfies(M, parse_fo("R(z)"))


def test_structure_validation():
    with pytest.raises(ValueError, match="universe"):
        PlausibleStructure(2, {}, {}, {},
                           PseudoTopology(3, frozenset([7])))
    with pytest.raises(ValueError, match="invalid opens"):
        structure(2, [1, 2, 3])
    with pytest.raises(ValueError, match="total"):
        structure(2, [1, 3], functions={"f": [((0,), 1)]})
    with pytest.raises(ValueError, match="out of range"):
        structure(2, [1, 3], constants={"c": 5})


def test_json_round_trip(M):
    doc = M.to_json()
    assert doc["omega"] == [4, 5, 6, 7]
    assert PlausibleStructure.from_json(doc) == M
    assert PlausibleStructure.from_json(doc).to_json() == doc


def test_check_axioms_on_principal_structure():
    # principal opens make the quantifier behave like "holds at the point"
    M = PlausibleStructure(3, {"R": frozenset([(0,), (2,)]),
                               "Q": frozenset([(2,)])},
                           {}, {}, principal_space(3, 2))
    report = check_axioms(M, parse_fo("R(x)"), parse_fo("Q(x)"), "x")
    assert report.all_hold()


def test_check_axioms_finds_the_known_monotonicity_failure():
    # smallest found failure of the monotonicity axiom: the set defined by
    # phi is open, psi defines a strictly larger set that is not open
    M = structure(3, [4, 7], relations={"R": [(2,)], "S": [(1,), (2,)]})
    report = check_axioms(M, parse_fo("R(x)"), parse_fo("S(x)"), "x")
    assert report.a1 and report.a2 and report.a3 and report.a4 and report.a6
    assert not report.a5


def test_alphabetic_variant_invariance(M):
    f = parse_fo("P x. R(x)")
    g = parse_fo("P y. R(y)")
    assert satisfies(M, f) == satisfies(M, g)
    report = check_axioms(M, parse_fo("R(x)"), parse_fo("Less(c, x)"), "x")
    assert report.a6
