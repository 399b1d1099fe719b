"""Seeded random formula generation for cross-oracle sweeps."""

from __future__ import annotations

import random

from .formula import (And, Atom, Bottom, Formula, Iff, Implies, Nabla, Not,
                      Or, Top, size)

DEFAULT_ATOMS = ("p", "q", "r")


def random_formula(rng: random.Random, max_size: int = 12,
                   atom_names: tuple[str, ...] = DEFAULT_ATOMS) -> Formula:
    """One random formula of at most max_size nodes."""
    budget = rng.randint(1, max_size)

    def build(n: int) -> Formula:
        if n <= 1:
            roll = rng.random()
            if roll < 0.85:
                return Atom(rng.choice(atom_names))
            return Top() if roll < 0.925 else Bottom()
        kinds = ("not", "nabla") if n == 2 else \
            ("not", "nabla", "and", "or", "implies", "iff")
        kind = rng.choice(kinds)
        if kind == "not":
            return Not(build(n - 1))
        if kind == "nabla":
            return Nabla(build(n - 1))
        left_budget = rng.randint(1, n - 2)
        ctor = {"and": And, "or": Or, "implies": Implies, "iff": Iff}[kind]
        return ctor(build(left_budget), build(n - 1 - left_budget))

    f = build(budget)
    assert size(f) <= max_size
    return f


def corpus(seed: int, count: int, max_size: int = 12,
           atom_names: tuple[str, ...] = DEFAULT_ATOMS) -> list[Formula]:
    """Deterministic list of random formulas."""
    rng = random.Random(seed)
    return [random_formula(rng, max_size, atom_names) for _ in range(count)]
