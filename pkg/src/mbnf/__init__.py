"""Propositional solver for the logic of minimal belief and negation as failure."""

from .errors import ContractError, MbnfError, OracleCapExceeded, ParseError
from .formula import (Formula, FormulaClass, alphabet_of, atom, box, classify,
                      conj, conjoin, disj, impl, naf, neg, parse, to_text)
from .propsat import Assignment, satisfiable, satisfy, valid
from .partition import (ModalAtomTable, Partition, modal_atoms, ob, prt,
                        query_eval, stable_set_member, substitute)
from .s5check import S5Result, s5_valid
from .engine import (TheoryQuery, Verdict, Witness, ael_entails, entails,
                     flat_not_entails, mbnf_not_entails, mknf_entails, tau,
                     tau_theory)
from .oracle import (ModelFamily, WorldSet, ael_models, mbnf_entails_brute,
                     mbnf_models, satisfies)

__all__ = [
    "Assignment", "ContractError", "Formula", "FormulaClass", "MbnfError",
    "ModalAtomTable", "ModelFamily", "OracleCapExceeded", "ParseError",
    "Partition", "S5Result", "TheoryQuery", "Verdict", "Witness", "WorldSet",
    "ael_entails", "ael_models", "alphabet_of", "atom", "box", "classify",
    "conj", "conjoin", "disj", "entails", "flat_not_entails", "impl",
    "mbnf_entails_brute", "mbnf_models", "mbnf_not_entails", "mknf_entails",
    "modal_atoms", "naf", "neg", "ob", "parse", "prt", "query_eval",
    "s5_valid", "satisfiable", "satisfies", "satisfy", "stable_set_member",
    "substitute", "tau", "tau_theory", "to_text", "valid",
]
