"""Partition machinery over the modal atoms of a formula.

A modal atom is a subformula rooted at B or not.  A partition guesses, for
every modal atom, whether it holds (P) or fails (N).  Substituting the guess
into a formula yields a propositional formula, and the conjunction of the
substituted bodies of the believed B-atoms is the objective knowledge ob(P,N)
of the guess.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .formula import (BOX, NAF, FALSE_F, TRUE_F, Formula, classify, conjoin,
                      modal_depth)
from .propsat import implies_prop


@dataclass(frozen=True)
class ModalAtomTable:
    """Deduplicated modal atoms of a source formula.

    Ordered by nondecreasing modal depth, ties broken by first occurrence in
    a pre-order walk, so the atoms nested inside atom k always precede k.
    """

    source: Formula
    atoms: tuple
    depths: tuple

    def __len__(self):
        return len(self.atoms)

    def index(self, a: Formula) -> int:
        return self.atoms.index(a)


def modal_atoms(sigma: Formula) -> ModalAtomTable:
    seen = {}

    def walk(f):
        if f.kind in (BOX, NAF) and f not in seen:
            seen[f] = len(seen)
        for c in f.children:
            walk(c)

    walk(sigma)
    ordered = sorted(seen, key=lambda a: (modal_depth(a), seen[a]))
    return ModalAtomTable(sigma, tuple(ordered), tuple(modal_depth(a) for a in ordered))


@dataclass(frozen=True)
class Partition:
    """A (P, N) split of a modal atom table; in_p[i] is true iff atom i is in P."""

    table: ModalAtomTable
    in_p: tuple

    def __post_init__(self):
        assert len(self.in_p) == len(self.table.atoms)

    @classmethod
    def from_index(cls, table: ModalAtomTable, k: int) -> "Partition":
        # binary counter over table order, low index = least significant bit
        return cls(table, tuple(bool((k >> i) & 1) for i in range(len(table))))

    @classmethod
    def from_p_atoms(cls, table: ModalAtomTable, p_atoms) -> "Partition":
        p_atoms = set(p_atoms)
        return cls(table, tuple(a in p_atoms for a in table.atoms))

    @property
    def index(self) -> int:
        return sum(1 << i for i, b in enumerate(self.in_p) if b)

    def p_atoms(self) -> tuple:
        return tuple(a for a, b in zip(self.table.atoms, self.in_p) if b)

    def n_atoms(self) -> tuple:
        return tuple(a for a, b in zip(self.table.atoms, self.in_p) if not b)

    def assignment(self) -> dict:
        return dict(zip(self.table.atoms, self.in_p))

    def naf_kept_assignment(self) -> dict:
        """The (P_n, N) guess: not-atoms of P true, all of N false, B-atoms of P kept."""
        out = {}
        for a, b in zip(self.table.atoms, self.in_p):
            if not b:
                out[a] = False
            elif a.kind == NAF:
                out[a] = True
        return out


def enumerate_partitions(table: ModalAtomTable):
    for k in range(1 << len(table)):
        yield Partition.from_index(table, k)


def substitute(f: Formula, assignment: dict) -> Formula:
    """Replace every strict occurrence of an assigned modal atom by its constant.

    Occurrences below a modality are untouched; unassigned modal subformulas
    stay in place.
    """
    if f in assignment:
        return TRUE_F if assignment[f] else FALSE_F
    if f.kind in (BOX, NAF):
        return f
    if not f.children:
        return f
    return Formula(f.kind, name=f.name,
                   children=tuple(substitute(c, assignment) for c in f.children))


def ob(pi: Partition) -> Formula:
    """Objective knowledge of the guess: conjunction over believed B-atoms of
    their substituted bodies; empty conjunction is true."""
    assignment = pi.assignment()
    bodies = [substitute(a.children[0], assignment)
              for a in pi.p_atoms() if a.kind == BOX]
    return conjoin(bodies)


def prt(table: ModalAtomTable, phi: Formula, psi: Formula = None) -> Partition:
    """The partition induced by the world-set pair (mods(phi), mods(psi)).

    Built in one deterministic inner-first pass: by the time an atom is
    resolved its substituted body is already objective.
    """
    if psi is None:
        psi = phi
    assignment = {}
    bits = []
    for a in table.atoms:
        body = substitute(a.children[0], assignment)
        if a.kind == BOX:
            holds = implies_prop(phi, body)
        else:
            holds = not implies_prop(psi, body)
        assignment[a] = holds
        bits.append(holds)
    return Partition(table, tuple(bits))


def query_eval(phi: Formula, psi: Formula) -> Formula:
    """phi with each strict B-atom replaced by its truth in the world set mods(psi)."""
    cls = classify(phi)
    if not cls.is_positive:
        raise ContractError("query evaluation requires a not-free formula")
    table = modal_atoms(phi)
    pi = prt(table, psi, psi)
    return substitute(phi, pi.assignment())


def stable_set_member(chi: Formula, psi: Formula) -> bool:
    """Membership of a positive subjective formula in the stable set of mods(psi)."""
    cls = classify(chi)
    if not (cls.is_positive and cls.is_subjective):
        raise ContractError("stable-set membership requires a positive subjective formula")
    return implies_prop(TRUE_F, query_eval(chi, psi))
