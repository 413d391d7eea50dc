"""Propositional backend tests: examples, laws, and a truth-table differential."""

import itertools
import random

import pytest

from mbnf.errors import ContractError
from mbnf.formula import alphabet_of, atom, box, conj, impl, neg, parse
from mbnf.propsat import (evaluate, fold_constants, implies_prop, satisfiable,
                          satisfy, valid)
from conftest import gen_formula


def test_satisfy_basics():
    assert satisfy(parse("a & ~a")) is None
    assert satisfy(parse("false")) is None
    w = satisfy(parse("a & (a -> b)"))
    assert w is not None
    assert w.value("a") and w.value("b")
    assert str(w) == "{a, b}"


def test_satisfy_constant_roots():
    w = satisfy(parse("true"))
    assert w is not None and w.atoms == ()
    assert satisfy(parse("a | ~a")) is not None


def test_witness_projection_alphabet():
    w = satisfy(atom("a"), alphabet=("a", "b"))
    assert w.atoms == ("a", "b")
    assert w.value("a") and not w.value("b")


def test_validity_laws():
    assert valid(parse("a -> a"))
    assert valid(parse("a | ~a"))
    assert not valid(parse("a | b"))
    assert implies_prop(parse("a & b"), parse("a"))
    assert not implies_prop(parse("a"), parse("a & b"))
    assert implies_prop(parse("false"), parse("a"))


def test_modal_operator_rejected():
    with pytest.raises(ContractError):
        satisfy(box(atom("a")))


def test_fold_constants():
    assert fold_constants(parse("a & true")) == atom("a")
    assert fold_constants(parse("a | true")) == parse("true")
    assert fold_constants(parse("a -> false")) == neg(atom("a"))
    assert fold_constants(parse("false -> a")) == parse("true")
    # modal nodes survive with folded children
    assert fold_constants(box(parse("a & true"))) == box(atom("a"))


def _truth_table_satisfiable(f):
    atoms = alphabet_of(f)
    for bits in itertools.product((False, True), repeat=len(atoms)):
        if evaluate(f, dict(zip(atoms, bits))):
            return True
    return False


def test_differential_against_truth_table():
    rng = random.Random(99)
    for _ in range(300):
        f = gen_formula(rng, modal_budget=0, size=5)
        expected = _truth_table_satisfiable(f)
        w = satisfy(f)
        assert (w is not None) == expected
        if w is not None:
            assert evaluate(f, w)


def test_determinism():
    f = parse("(a | b) & (~a | c) & (~b | ~c)")
    w1 = satisfy(f)
    w2 = satisfy(f)
    assert w1 == w2


def test_satisfiable_helper():
    assert satisfiable(parse("a"))
    assert not satisfiable(conj(atom("a"), neg(atom("a"))))
    assert valid(impl(parse("a & b"), parse("b & a")))
