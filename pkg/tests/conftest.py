"""Shared helpers for the test suite: seeded random formula generators used
by the differential tests."""

import random

from mbnf.formula import atom, box, classify, conj, disj, impl, naf, neg
from mbnf.partition import modal_atoms

ATOMS = ("a", "b", "c")


def gen_formula(rng: random.Random, modal_budget: int, size: int):
    """Random formula over a fixed three-letter alphabet.

    modal_budget bounds the remaining modal nesting depth; size shrinks on
    recursion so generation terminates.
    """
    choices = ["atom", "atom", "neg", "and", "or", "implies"]
    if modal_budget > 0:
        choices += ["box", "naf"]
    kind = rng.choice(choices) if size > 0 else "atom"
    if kind == "atom":
        return atom(rng.choice(ATOMS))
    if kind == "neg":
        return neg(gen_formula(rng, modal_budget, size - 1))
    if kind == "box":
        return box(gen_formula(rng, modal_budget - 1, size - 1))
    if kind == "naf":
        return naf(gen_formula(rng, modal_budget - 1, size - 1))
    left = gen_formula(rng, modal_budget, size - 1)
    right = gen_formula(rng, modal_budget, size - 1)
    op = {"and": conj, "or": disj, "implies": impl}[kind]
    return op(left, right)


def gen_theory(rng: random.Random, max_modal_atoms: int = 4):
    """Random theory formula with at least one modal atom, capped so that the
    partition scan stays small."""
    while True:
        sigma = gen_formula(rng, modal_budget=2, size=4)
        table = modal_atoms(sigma)
        if 1 <= len(table.atoms) <= max_modal_atoms:
            if classify(sigma).depth <= 2:
                return sigma


def gen_query(rng: random.Random, max_modal_atoms: int = 3):
    """Random not-free query, modally shallow."""
    while True:
        phi = gen_formula(rng, modal_budget=1, size=3)
        info = classify(phi)
        if not info.is_positive:
            continue
        if len(modal_atoms(phi).atoms) <= max_modal_atoms:
            return phi
