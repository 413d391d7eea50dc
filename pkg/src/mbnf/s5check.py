"""S5 validity for flat, subjective, positive formulas.

A formula in this fragment is a Boolean combination of atoms B(alpha) with
objective alpha, so S5 validity reduces to: no truth assignment over those
atoms both refutes the propositional skeleton and is realizable by a
nonempty set of interpretations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import counters
from .errors import ContractError
from .formula import (AND, BOX, FALSE, IMPLIES, NEG, OR, TRUE, Formula,
                      classify, conjoin, neg)
from . import propsat


@dataclass(frozen=True)
class S5Counter:
    """Description of a refuting world set: all models of `worlds_formula`."""

    atom_values: dict = field(hash=False)
    worlds_formula: Formula = None
    witness: object = None  # Assignment inside the world set


@dataclass(frozen=True)
class S5Result:
    valid: bool
    counter: S5Counter = None

    def __bool__(self):
        return self.valid


def _strict_box_atoms(f: Formula, out):
    if f.kind == BOX:
        if f not in out:
            out.append(f)
        return
    for c in f.children:
        _strict_box_atoms(c, out)


def _skeleton_value(f: Formula, values: dict) -> bool:
    if f.kind == BOX:
        return values[f]
    if f.kind == TRUE:
        return True
    if f.kind == FALSE:
        return False
    if f.kind == NEG:
        return not _skeleton_value(f.children[0], values)
    if f.kind == AND:
        return _skeleton_value(f.children[0], values) and _skeleton_value(f.children[1], values)
    if f.kind == OR:
        return _skeleton_value(f.children[0], values) or _skeleton_value(f.children[1], values)
    if f.kind == IMPLIES:
        return (not _skeleton_value(f.children[0], values)) or _skeleton_value(f.children[1], values)
    raise ContractError(f"unexpected node {f.kind!r} in S5 skeleton")


def s5_valid(q: Formula) -> S5Result:
    """Decide S5 validity of a flat subjective positive formula.

    Enumerates truth assignments over the strict B-atoms in binary-counter
    order; an assignment refutes q iff the skeleton of ~q holds under it and
    it is realizable by a nonempty world set.  World sets are nonempty by
    construction (the realizing set is all models of the believed bodies).
    """
    cls = classify(q)
    if not (cls.is_flat and cls.is_subjective and cls.is_positive):
        raise ContractError("S5 check requires a flat subjective positive formula")

    sat_before = counters.sat_calls
    counters.s5_calls += 1
    try:
        atoms = []
        _strict_box_atoms(q, atoms)
        bodies = [a.children[0] for a in atoms]
        for v in range(1 << len(atoms)):
            values = {a: bool((v >> i) & 1) for i, a in enumerate(atoms)}
            if _skeleton_value(q, values):
                continue
            believed = conjoin([b for a, b in zip(atoms, bodies) if values[a]])
            witness = propsat.satisfy(believed)
            if witness is None:
                continue
            realizable = all(
                propsat.satisfy(Formula(AND, children=(believed, neg(b)))) is not None
                for a, b in zip(atoms, bodies) if not values[a])
            if realizable:
                return S5Result(False, S5Counter(values, believed, witness))
        return S5Result(True)
    finally:
        counters.s5_internal_sat_calls += counters.sat_calls - sat_before
