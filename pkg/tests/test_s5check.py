"""S5 validity checks for the flat subjective positive fragment."""

import random

import pytest

from mbnf.errors import ContractError
from mbnf.formula import alphabet_of, classify, parse
from mbnf.oracle import truth_mask
from mbnf.propsat import evaluate, implies_prop
from mbnf.s5check import s5_valid
from conftest import gen_formula


def test_tautologies_and_theorems():
    assert s5_valid(parse("B p -> B p")).valid
    assert s5_valid(parse("B p | ~B p")).valid
    assert s5_valid(parse("B(p & q) -> B p")).valid
    assert s5_valid(parse("B p -> B(p | q)")).valid
    assert s5_valid(parse("B(false) -> B p")).valid


def test_non_theorems():
    assert not s5_valid(parse("B p")).valid
    assert not s5_valid(parse("B p -> B(p & q)")).valid
    assert not s5_valid(parse("B(p | q) -> B p | B q")).valid


def test_rejection_with_counter_world_set():
    # (B a | B(a & b)) -> B(a & b) fails: believing exactly a refutes it
    result = s5_valid(parse("(B a | B(a & b)) -> B(a & b)"))
    assert not result.valid
    counter = result.counter
    assert implies_prop(counter.worlds_formula, parse("a"))
    assert implies_prop(parse("a"), counter.worlds_formula)
    # the witness lies inside the refuting world set
    assert evaluate(counter.worlds_formula, counter.witness)
    assert counter.atom_values[parse("B a")] is True
    assert counter.atom_values[parse("B(a & b)")] is False


def test_fragment_guard():
    with pytest.raises(ContractError):
        s5_valid(parse("B p & q"))  # not subjective
    with pytest.raises(ContractError):
        s5_valid(parse("B(B p)"))  # not flat
    with pytest.raises(ContractError):
        s5_valid(parse("not p -> B p"))  # not positive


def _s5_valid_brute(q, alphabet):
    # a subjective formula holds in either every or no structure over a fixed
    # world set, so validity is truth under every nonempty world set
    n = len(alphabet)
    for m in range(1, 1 << (1 << n)):
        if truth_mask(q, m, m, alphabet) == 0:
            return False
    return True


def test_differential_against_world_set_enumeration():
    rng = random.Random(4242)
    checked = 0
    while checked < 60:
        q = gen_formula(rng, modal_budget=1, size=4)
        info = classify(q)
        if not (info.is_flat and info.is_subjective and info.is_positive):
            continue
        alphabet = alphabet_of(q)
        if not 1 <= len(alphabet) <= 2:
            continue
        assert s5_valid(q).valid == _s5_valid_brute(q, alphabet)
        checked += 1
