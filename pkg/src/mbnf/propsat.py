"""Propositional satisfiability, validity and implication over objective formulas.

This is the NP-oracle the partition engines call.  The backend is a small
complete DPLL procedure over a definitional (fresh-variable) clausal form;
fresh variables are projected out of witnesses.  Branching is deterministic
(lowest variable index first, false before true) so witnesses are stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import counters
from .errors import ContractError
from .formula import (AND, ATOM, BOX, FALSE, FALSE_F, IMPLIES, NAF, NEG, OR,
                      TRUE, TRUE_F, Formula, alphabet_of, impl, neg)


@dataclass(frozen=True)
class Assignment:
    """A truth assignment over an ordered atom list."""

    atoms: tuple
    bits: tuple

    def __post_init__(self):
        assert len(self.atoms) == len(self.bits)

    def value(self, name: str) -> bool:
        return self.bits[self.atoms.index(name)]

    def true_atoms(self) -> tuple:
        return tuple(a for a, b in zip(self.atoms, self.bits) if b)

    def as_dict(self) -> dict:
        return dict(zip(self.atoms, self.bits))

    def __str__(self):
        return "{" + ", ".join(self.true_atoms()) + "}"


def evaluate(f: Formula, assignment) -> bool:
    """Truth value of an objective formula under an assignment (dict or Assignment)."""
    if isinstance(assignment, Assignment):
        assignment = assignment.as_dict()
    k = f.kind
    if k == ATOM:
        return bool(assignment.get(f.name, False))
    if k == TRUE:
        return True
    if k == FALSE:
        return False
    if k == NEG:
        return not evaluate(f.children[0], assignment)
    if k == AND:
        return evaluate(f.children[0], assignment) and evaluate(f.children[1], assignment)
    if k == OR:
        return evaluate(f.children[0], assignment) or evaluate(f.children[1], assignment)
    if k == IMPLIES:
        return (not evaluate(f.children[0], assignment)) or evaluate(f.children[1], assignment)
    raise ContractError(f"modal operator {k!r} in objective evaluation")


def fold_constants(f: Formula) -> Formula:
    """Propositional constant folding; modal nodes keep their (folded) children."""
    k = f.kind
    if k in (ATOM, TRUE, FALSE):
        return f
    if k in (BOX, NAF):
        return Formula(k, children=(fold_constants(f.children[0]),))
    if k == NEG:
        c = fold_constants(f.children[0])
        if c.kind == TRUE:
            return FALSE_F
        if c.kind == FALSE:
            return TRUE_F
        return Formula(NEG, children=(c,))
    l = fold_constants(f.children[0])
    r = fold_constants(f.children[1])
    if k == AND:
        if l.kind == FALSE or r.kind == FALSE:
            return FALSE_F
        if l.kind == TRUE:
            return r
        if r.kind == TRUE:
            return l
    elif k == OR:
        if l.kind == TRUE or r.kind == TRUE:
            return TRUE_F
        if l.kind == FALSE:
            return r
        if r.kind == FALSE:
            return l
    elif k == IMPLIES:
        if l.kind == FALSE or r.kind == TRUE:
            return TRUE_F
        if l.kind == TRUE:
            return r
        if r.kind == FALSE:
            return fold_constants(Formula(NEG, children=(l,)))
    return Formula(k, children=(l, r))


class _Clausifier:
    """Definitional transformation to CNF; atom vars first, fresh vars after."""

    def __init__(self, atom_order):
        self.var_of_atom = {a: i + 1 for i, a in enumerate(atom_order)}
        self.next_var = len(atom_order) + 1
        self.clauses = []

    def fresh(self):
        v = self.next_var
        self.next_var += 1
        return v

    def literal(self, f: Formula) -> int:
        k = f.kind
        if k == ATOM:
            return self.var_of_atom[f.name]
        if k == NEG:
            return -self.literal(f.children[0])
        if k in (BOX, NAF):
            raise ContractError("modal operator reached the propositional solver")
        if k in (TRUE, FALSE):
            # fold_constants leaves constants only at the root
            raise AssertionError("unfolded constant below the root")
        l = self.literal(f.children[0])
        r = self.literal(f.children[1])
        v = self.fresh()
        if k == AND:
            self.clauses += [(-v, l), (-v, r), (-l, -r, v)]
        elif k == OR:
            self.clauses += [(-v, l, r), (-l, v), (-r, v)]
        elif k == IMPLIES:
            self.clauses += [(-v, -l, r), (l, v), (-r, v)]
        else:
            raise AssertionError(f"unknown kind {k}")
        return v


def _dpll(clauses, nvars):
    """Return a model as a dict var -> bool, or None. Deterministic search order."""
    assign = {}

    def propagate():
        changed = True
        while changed:
            changed = False
            for clause in clauses:
                unassigned = None
                satisfied = False
                count = 0
                for lit in clause:
                    v = abs(lit)
                    if v in assign:
                        if assign[v] == (lit > 0):
                            satisfied = True
                            break
                    else:
                        unassigned = lit
                        count += 1
                if satisfied:
                    continue
                if count == 0:
                    return False  # conflict
                if count == 1:
                    assign[abs(unassigned)] = unassigned > 0
                    changed = True
        return True

    def search():
        if not propagate():
            return False
        var = next((v for v in range(1, nvars + 1) if v not in assign), None)
        if var is None:
            return True
        saved = dict(assign)
        for value in (False, True):
            assign[var] = value
            if search():
                return True
            assign.clear()
            assign.update(saved)
        return False

    return assign if search() else None


def satisfy(f: Formula, alphabet=None):
    """Witness Assignment satisfying f, or None if unsatisfiable.

    The witness ranges over `alphabet` (default: f's own atoms, sorted);
    atoms the solver leaves unconstrained come out false.
    """
    counters.count_sat_call()
    if alphabet is None:
        alphabet = alphabet_of(f)
    g = fold_constants(f)
    if g.kind == TRUE:
        return Assignment(tuple(alphabet), (False,) * len(alphabet))
    if g.kind == FALSE:
        return None
    cl = _Clausifier(sorted(alphabet_of(g)))
    root = cl.literal(g)
    cl.clauses.append((root,))
    model = _dpll(cl.clauses, cl.next_var - 1)
    if model is None:
        return None
    bits = tuple(bool(model.get(cl.var_of_atom.get(a, 0), False)) for a in alphabet)
    return Assignment(tuple(alphabet), bits)


def satisfiable(f: Formula) -> bool:
    return satisfy(f) is not None


def valid(f: Formula) -> bool:
    return satisfy(neg(f)) is None


def implies_prop(f: Formula, g: Formula) -> bool:
    return valid(impl(f, g))
