"""Pseudo-topological spaces (E, Omega) at desk scale.

Omega is a family of subsets of a finite universe, stored as bitmasks,
closed under pairwise intersection and union, containing the whole universe
and excluding the empty set.  Weaker than a topology: no arbitrary unions,
and the empty set is banned outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .formula import And, Bottom, Formula, Iff, Or, is_classical_tautology

MAX_UNIVERSE = 4


@dataclass(frozen=True)
class PseudoTopology:
    universe_size: int
    opens: frozenset[int]

    @property
    def full(self) -> int:
        return (1 << self.universe_size) - 1

    def to_json(self) -> dict:
        return {"universe_size": self.universe_size, "opens": sorted(self.opens)}

    @classmethod
    def from_json(cls, doc: dict) -> "PseudoTopology":
        return cls(doc["universe_size"], frozenset(doc["opens"]))


@dataclass(frozen=True)
class Verdict:
    ok: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate(space: PseudoTopology) -> Verdict:
    """E1: closed under pairwise intersection; E2: closed under pairwise
    union; E3: the universe is open; E4: the empty set is not."""
    full = space.full
    for a in space.opens:
        if a & ~full:
            raise ValueError(f"open {a} out of range for universe of "
                             f"size {space.universe_size}")
    if 0 in space.opens:
        return Verdict(False, "E4", (0,))
    if full not in space.opens:
        return Verdict(False, "E3", (full,))
    members = space.opens
    for a in members:
        for b in members:
            if a & b not in members:
                return Verdict(False, "E1", (a, b))
            if a | b not in members:
                return Verdict(False, "E2", (a, b))
    return Verdict(True)


def enumerate_spaces(universe_size: int) -> Iterator[PseudoTopology]:
    """Every valid opens-family, in a deterministic order.

    Depth-first over candidate masks 1..full in ascending order, deciding
    exclusion before inclusion.  Pruning: two included opens may not be
    disjoint, their intersection (a smaller mask, already decided) must be
    included, and a mask required as a union of included opens may not be
    excluded when its turn comes.
    """
    if universe_size > MAX_UNIVERSE:
        raise ValueError(f"universe_size must be <= {MAX_UNIVERSE}")
    full = (1 << universe_size) - 1
    masks = list(range(1, full + 1))

    def rec(i: int, chosen: list[int], required: frozenset[int]
            ) -> Iterator[PseudoTopology]:
        if i == len(masks):
            yield PseudoTopology(universe_size, frozenset(chosen))
            return
        m = masks[i]
        # exclude m (never allowed for the full mask, E3)
        if m != full and m not in required:
            yield from rec(i + 1, chosen, required)
        # include m
        new_required = set(required)
        ok = True
        for c in chosen:
            inter, union = c & m, c | m
            if inter == 0:
                ok = False  # would force the empty set open (E1 vs E4)
                break
            if inter < m and inter not in chosen:
                ok = False  # intersection was already rejected
                break
            if union > m:
                new_required.add(union)
        if ok:
            chosen.append(m)
            yield from rec(i + 1, chosen, frozenset(new_required))
            chosen.pop()

    yield from rec(0, [], frozenset())


def pairwise_nondisjoint(space: PseudoTopology) -> bool:
    """No two opens are disjoint.  A theorem for valid spaces, exposed so it
    can be verified exhaustively."""
    members = sorted(space.opens)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a & b == 0:
                return False
    return True


def principal_space(universe_size: int, point: int) -> PseudoTopology:
    """All subsets containing the given point."""
    full = (1 << universe_size) - 1
    return PseudoTopology(universe_size,
                          frozenset(m for m in range(1, full + 1)
                                    if m >> point & 1))


def check_valuation_constraints(space: PseudoTopology,
                                valuation: dict[Formula, int],
                                formulas: list[Formula]) -> Verdict:
    """Check the listed constraints on an interpretation of formulas as
    subsets, relative to the opens-family:

    1. classical tautologies map to the whole universe;
    2. if two listed formulas map into the opens, so does their listed
       conjunction;
    3. if either of two listed formulas maps into the opens, so does their
       listed disjunction;
    4. classically equivalent listed formulas are in the opens together;
    5. the interpretation of falsum is not open.

    Only these constraints are checked; no satisfaction relation is defined.
    """
    opens = space.opens
    for f in formulas:
        if f not in valuation:
            raise ValueError(f"valuation missing listed formula {f}")
        if is_classical_tautology(f) and valuation[f] != space.full:
            return Verdict(False, "tautology", (str(f),),
                           "tautology not mapped to the universe")
    for f in formulas:
        for g in formulas:
            conj = And(f, g)
            if conj in valuation and valuation[f] in opens \
                    and valuation[g] in opens and valuation[conj] not in opens:
                return Verdict(False, "conjunction", (str(f), str(g)),
                               "open pair with non-open conjunction")
            disj = Or(f, g)
            if disj in valuation and (valuation[f] in opens
                                      or valuation[g] in opens) \
                    and valuation[disj] not in opens:
                return Verdict(False, "disjunction", (str(f), str(g)),
                               "open disjunct with non-open disjunction")
    seen = []
    for f in formulas:
        for g in seen:
            if is_classical_tautology(Iff(f, g)) \
                    and (valuation[f] in opens) != (valuation[g] in opens):
                return Verdict(False, "equivalence", (str(f), str(g)),
                               "equivalent formulas split by the opens")
        seen.append(f)
    bot = Bottom()
    if bot in valuation and valuation[bot] in opens:
        return Verdict(False, "falsum", (str(bot),),
                       "falsum interpreted as an open")
    return Verdict(True)
