"""Entailment engines: the general and flat partition algorithms, the
dispatcher, and the MKNF / autoepistemic front doors.

Both partition engines search the guesses (P, N) over the modal atoms of the
theory in binary-counter order.  A guess qualifies when it is self-consistent
(condition a), some initial world satisfies the substituted theory but not
the query (condition b), and the world set it describes is maximal
(condition c).  A qualifying guess is a countermodel family, so the query is
not entailed; the first one found becomes the witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractError
from .formula import (BOX, NAF, Formula, alphabet_of, box, classify,
                      conj, conjoin, impl, neg)
from .partition import (Partition, enumerate_partitions, modal_atoms, ob, prt,
                        query_eval, substitute)
from .propsat import Assignment, satisfy
from .s5check import s5_valid
from . import counters, oracle


@dataclass(frozen=True)
class Witness:
    """Countermodel description: the qualifying guess, its objective
    knowledge, and an initial world refuting the query."""

    partition: Partition
    ob_formula: Formula
    initial_world: Assignment


@dataclass(frozen=True)
class Verdict:
    entailed: bool
    witness: Witness = None
    engine: str = "general"
    notices: tuple = ()

    def with_notices(self, notices):
        return Verdict(self.entailed, self.witness, self.engine,
                       self.notices + tuple(notices))


@dataclass(frozen=True)
class TheoryQuery:
    """A theory (conjoined into one formula) plus a normalized query."""

    sigma: Formula
    query: Formula

    @classmethod
    def from_formulas(cls, theory_formulas, query: Formula) -> "TheoryQuery":
        return cls(conjoin(theory_formulas), rewrite_naf(query))


def rewrite_naf(f: Formula) -> Formula:
    """Replace every not node by ~B: in queries both modalities are evaluated
    on the same world set, so they coincide."""
    if f.kind == NAF:
        return neg(box(rewrite_naf(f.children[0])))
    if not f.children:
        return f
    return Formula(f.kind, name=f.name,
                   children=tuple(rewrite_naf(c) for c in f.children))


def _require_positive(phi: Formula):
    if not classify(phi).is_positive:
        raise ContractError("queries must be not-free (rewrite not to ~B first)")


def _check_ab(sigma, phi, pi, alphabet):
    """Conditions (a) and (b) shared by both engines.

    Returns (ob_formula, witness_assignment) when both hold, else None."""
    obf = ob(pi)
    if prt(pi.table, obf, obf) != pi:
        return None
    # the guess must describe a nonempty world set
    if satisfy(obf) is None:
        return None
    refuting = conj(substitute(sigma, pi.assignment()),
                    neg(query_eval(phi, obf)))
    world = satisfy(refuting, alphabet)
    if world is None:
        return None
    return obf, world


def mbnf_not_entails(sigma: Formula, phi: Formula) -> Verdict:
    """General algorithm: condition (c) scans every other partition to make
    sure none of them describes a strictly larger world set satisfying the
    theory."""
    _require_positive(phi)
    table = modal_atoms(sigma)
    alphabet = alphabet_of(sigma, phi)
    for pi in enumerate_partitions(table):
        hit = _check_ab(sigma, phi, pi, alphabet)
        if hit is None:
            continue
        obf, world = hit
        if _general_maximality(sigma, table, pi, obf):
            return Verdict(False, Witness(pi, obf, world), "general")
    return Verdict(True, engine="general")


def _general_maximality(sigma, table, pi, obf):
    before = counters.sat_calls
    try:
        return _general_maximality_scan(sigma, table, pi, obf)
    finally:
        counters.maximality_sat_calls += counters.sat_calls - before


def _general_maximality_scan(sigma, table, pi, obf):
    for pj in enumerate_partitions(table):
        if pj == pi:
            continue
        # (c1) the rival guess is inconsistent with the theory
        if satisfy(substitute(sigma, pj.assignment())) is None:
            continue
        # (c2) the rival guess is not induced by (mods(ob'), mods(ob))
        if pj != prt(table, ob(pj), obf):
            continue
        # (c3) the rival's objective knowledge is not weaker
        if satisfy(conj(obf, neg(ob(pj)))) is not None:
            continue
        return False
    return True


def flat_not_entails(sigma: Formula, phi: Formula) -> Verdict:
    """Flat algorithm: condition (c) is a single S5 validity check instead of
    a scan over rival partitions."""
    if not classify(sigma).is_flat:
        raise ContractError("flat engine requires a flat theory")
    _require_positive(phi)
    table = modal_atoms(sigma)
    alphabet = alphabet_of(sigma, phi)
    for pi in enumerate_partitions(table):
        hit = _check_ab(sigma, phi, pi, alphabet)
        if hit is None:
            continue
        obf, world = hit
        minimality = impl(substitute(sigma, pi.naf_kept_assignment()), box(obf))
        if s5_valid(minimality).valid:
            return Verdict(False, Witness(pi, obf, world), "flat")
    return Verdict(True, engine="flat")


def entails(sigma: Formula, query: Formula, mode: str = "auto",
            oracle_cap: int = oracle.DEFAULT_CAP) -> Verdict:
    """Entailment dispatcher.

    auto picks the flat engine for flat theories, otherwise the general one;
    not in the query is rewritten to ~B before dispatch.
    """
    notices = []
    if not classify(query).is_positive:
        query = rewrite_naf(query)
        notices.append("query contained 'not'; rewritten to ~B")
    if mode == "auto":
        mode = "flat" if classify(sigma).is_flat else "general"
    if mode == "general":
        verdict = mbnf_not_entails(sigma, query)
    elif mode == "flat":
        verdict = flat_not_entails(sigma, query)
    elif mode == "oracle":
        alphabet = alphabet_of(sigma, query)
        oracle.check_cap(alphabet, oracle_cap)
        entailed = oracle.mbnf_entails_brute(sigma, query, alphabet, oracle_cap)
        verdict = Verdict(entailed, engine="oracle")
    else:
        raise ContractError(f"unknown engine mode {mode!r}")
    return verdict.with_notices(notices)


def mknf_entails(theory_formulas, phi: Formula, mode: str = "auto",
                 oracle_cap: int = oracle.DEFAULT_CAP) -> Verdict:
    """MKNF entailment via the B-wrapping reduction to MBNF."""
    sigma = conjoin(box(f) for f in theory_formulas)
    return entails(sigma, box(phi), mode, oracle_cap)


def tau(f: Formula) -> Formula:
    """Autoepistemic-to-MBNF formula translation: every B becomes ~not."""
    if f.kind == NAF:
        raise ContractError("autoepistemic formulas must be not-free")
    if f.kind == BOX:
        return neg(Formula(NAF, children=(tau(f.children[0]),)))
    if not f.children:
        return f
    return Formula(f.kind, name=f.name, children=tuple(tau(c) for c in f.children))


def tau_theory(theory_formulas) -> Formula:
    """Translate each member, wrap it in B, and conjoin."""
    return conjoin(box(tau(f)) for f in theory_formulas)


def ael_entails(theory_formulas, phi: Formula, mode: str = "auto",
                oracle_cap: int = oracle.DEFAULT_CAP) -> Verdict:
    """Skeptical autoepistemic entailment (consistent variant): phi belongs to
    every stable expansion iff every MBNF model of the translated theory
    believes it."""
    _require_positive(phi)
    return entails(tau_theory(theory_formulas), box(phi), mode, oracle_cap)
