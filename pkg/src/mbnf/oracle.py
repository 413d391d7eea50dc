"""Brute-force model enumeration over small alphabets.

Interpretations over an n-atom alphabet are integers 0..2^n-1 (bit i set iff
atom i holds); a set of interpretations is a bitset over those 2^n worlds.
Everything here is exhaustive by design: this module is the ground truth the
partition engines are tested against, so clarity beats speed.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import ContractError, OracleCapExceeded
from .formula import (AND, ATOM, BOX, FALSE, IMPLIES, NAF, NEG, OR, TRUE,
                      Formula, classify, conjoin)
from .partition import ModalAtomTable, Partition
from .propsat import Assignment

DEFAULT_CAP = 3
MAX_CAP = 4


def check_cap(alphabet, cap=DEFAULT_CAP):
    if cap > MAX_CAP:
        raise OracleCapExceeded(f"oracle cap {cap} above the hard maximum {MAX_CAP}")
    if cap > DEFAULT_CAP:
        warnings.warn(f"oracle cap {cap}: enumeration is exponential, expect slowness",
                      stacklevel=3)
    if len(alphabet) > cap:
        raise OracleCapExceeded(
            f"alphabet of size {len(alphabet)} exceeds the oracle cap {cap}")


@dataclass(frozen=True)
class WorldSet:
    """A set of interpretations as a bitset over all 2^n assignments."""

    alphabet: tuple
    mask: int

    def worlds(self) -> tuple:
        n = len(self.alphabet)
        return tuple(w for w in range(1 << n) if (self.mask >> w) & 1)

    def assignments(self) -> tuple:
        return tuple(world_assignment(w, self.alphabet) for w in self.worlds())

    def __contains__(self, world: int) -> bool:
        return bool((self.mask >> world) & 1)

    def __str__(self):
        return "{" + ", ".join(str(a) for a in self.assignments()) + "}"


@dataclass(frozen=True)
class ModelFamily:
    """A maximal world set together with all admissible initial worlds."""

    worlds: WorldSet
    initial_mask: int

    def initials(self) -> tuple:
        return tuple(world_assignment(w, self.worlds.alphabet)
                     for w in range(1 << len(self.worlds.alphabet))
                     if (self.initial_mask >> w) & 1)


def world_assignment(world: int, alphabet) -> Assignment:
    return Assignment(tuple(alphabet),
                      tuple(bool((world >> i) & 1) for i in range(len(alphabet))))


def assignment_world(assignment: Assignment, alphabet) -> int:
    values = assignment.as_dict()
    return sum(1 << i for i, a in enumerate(alphabet) if values.get(a, False))


def mods(f: Formula, alphabet) -> int:
    """Bitset of the interpretations satisfying an objective formula."""
    return truth_mask(f, 0, 0, alphabet, {})


def satisfies(i: Assignment, mb: WorldSet, mn: WorldSet, f: Formula) -> bool:
    """Literal recursive satisfaction in the structure (I, M_b, M_n)."""
    if mb.alphabet != mn.alphabet or set(i.atoms) != set(mb.alphabet):
        raise ContractError("alphabet mismatch between structure components")
    alphabet = mb.alphabet
    values = i.as_dict()

    def ev(world_values, g):
        k = g.kind
        if k == ATOM:
            return bool(world_values.get(g.name, False))
        if k == TRUE:
            return True
        if k == FALSE:
            return False
        if k == NEG:
            return not ev(world_values, g.children[0])
        if k == AND:
            return ev(world_values, g.children[0]) and ev(world_values, g.children[1])
        if k == OR:
            return ev(world_values, g.children[0]) or ev(world_values, g.children[1])
        if k == IMPLIES:
            return (not ev(world_values, g.children[0])) or ev(world_values, g.children[1])
        if k == BOX:
            return all(ev(world_assignment(j, alphabet).as_dict(), g.children[0])
                       for j in mb.worlds())
        if k == NAF:
            return any(not ev(world_assignment(j, alphabet).as_dict(), g.children[0])
                       for j in mn.worlds())
        raise AssertionError(k)

    return ev(values, f)


def truth_mask(f: Formula, mb_mask: int, mn_mask: int, alphabet, cache=None) -> int:
    """Bitset of initial worlds satisfying f with M_b, M_n fixed.

    Same semantics as `satisfies`, vectorized over initial worlds so that
    model enumeration stays affordable.
    """
    if cache is None:
        cache = {}
    n = len(alphabet)
    full = (1 << (1 << n)) - 1
    key = (f, mb_mask, mn_mask)
    hit = cache.get(key)
    if hit is not None:
        return hit
    k = f.kind
    if k == ATOM:
        i = alphabet.index(f.name)
        out = 0
        for w in range(1 << n):
            if (w >> i) & 1:
                out |= 1 << w
    elif k == TRUE:
        out = full
    elif k == FALSE:
        out = 0
    elif k == NEG:
        out = full & ~truth_mask(f.children[0], mb_mask, mn_mask, alphabet, cache)
    elif k == AND:
        out = (truth_mask(f.children[0], mb_mask, mn_mask, alphabet, cache)
               & truth_mask(f.children[1], mb_mask, mn_mask, alphabet, cache))
    elif k == OR:
        out = (truth_mask(f.children[0], mb_mask, mn_mask, alphabet, cache)
               | truth_mask(f.children[1], mb_mask, mn_mask, alphabet, cache))
    elif k == IMPLIES:
        l = truth_mask(f.children[0], mb_mask, mn_mask, alphabet, cache)
        out = (full & ~l) | truth_mask(f.children[1], mb_mask, mn_mask, alphabet, cache)
    elif k == BOX:
        c = truth_mask(f.children[0], mb_mask, mn_mask, alphabet, cache)
        out = full if (mb_mask & ~c) == 0 else 0
    elif k == NAF:
        c = truth_mask(f.children[0], mb_mask, mn_mask, alphabet, cache)
        out = full if (mn_mask & ~c) != 0 else 0
    else:
        raise AssertionError(k)
    cache[key] = out
    return out


def _world_sets(n):
    """All nonempty bitsets over 2^n worlds, increasing popcount then numeric."""
    sets = range(1, 1 << (1 << n))
    return sorted(sets, key=lambda m: (bin(m).count("1"), m))


def _proper_supersets(m, n):
    universe = (1 << (1 << n)) - 1
    rest = universe & ~m
    extra = rest
    while extra:
        yield m | extra
        extra = (extra - 1) & rest


def mbnf_models(sigma: Formula, alphabet, cap=DEFAULT_CAP) -> list:
    """All MBNF model families of sigma: maximal world sets M with every
    admissible initial world, in deterministic enumeration order."""
    alphabet = tuple(alphabet)
    check_cap(alphabet, cap)
    n = len(alphabet)
    cache = {}
    families = []
    for m in _world_sets(n):
        initials = truth_mask(sigma, m, m, alphabet, cache)
        if initials == 0:
            continue
        if any(truth_mask(sigma, sup, m, alphabet, cache) != 0
               for sup in _proper_supersets(m, n)):
            continue
        families.append(ModelFamily(WorldSet(alphabet, m), initials))
    return families


def mbnf_entails_brute(sigma: Formula, phi: Formula, alphabet, cap=DEFAULT_CAP) -> bool:
    """Skeptical entailment by model inspection: phi holds in every MBNF model."""
    alphabet = tuple(alphabet)
    cache = {}
    for family in mbnf_models(sigma, alphabet, cap):
        m = family.worlds.mask
        ok = truth_mask(phi, m, m, alphabet, cache)
        if family.initial_mask & ~ok:
            return False
    return True


def ael_models(formulas, alphabet, cap=DEFAULT_CAP) -> list:
    """World sets M such that every world in M satisfies the theory against M
    and no world outside M does (the fixed-point characterization of
    autoepistemic expansions, consistent variant)."""
    sigma = conjoin(formulas)
    if not classify(sigma).is_positive:
        raise ContractError("autoepistemic theories must be not-free")
    alphabet = tuple(alphabet)
    check_cap(alphabet, cap)
    n = len(alphabet)
    cache = {}
    out = []
    for m in _world_sets(n):
        if truth_mask(sigma, m, m, alphabet, cache) == m:
            out.append(WorldSet(alphabet, m))
    return out


def induced_partition(table: ModalAtomTable, mb_mask: int, mn_mask: int,
                      alphabet) -> Partition:
    """The partition of the table induced by the world-set pair (M_b, M_n):
    an atom goes to P iff the pair satisfies it."""
    alphabet = tuple(alphabet)
    cache = {}
    bits = tuple(truth_mask(a, mb_mask, mn_mask, alphabet, cache) != 0
                 for a in table.atoms)
    return Partition(table, bits)
