"""Bimodal formula AST, parser, printer and syntactic classification.

The language is propositional logic extended with two prefix modalities:
a belief modality ``B`` and a negation-as-failure modality ``not``.
Surface syntax (tightest first): {~, B, not} > & > | > -> (right assoc).
Unary operators bind to the smallest following formula.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .errors import ParseError

# node kinds
ATOM = "atom"
TRUE = "true"
FALSE = "false"
NEG = "neg"
AND = "and"
OR = "or"
IMPLIES = "implies"
BOX = "box"  # B
NAF = "naf"  # not

_BINARY = (AND, OR, IMPLIES)
_UNARY = (NEG, BOX, NAF)
_MODAL = (BOX, NAF)

RESERVED_WORDS = frozenset({"B", "not", "true", "false"})


@dataclass(frozen=True)
class Formula:
    """Immutable formula node; structural equality is formula identity."""

    kind: str
    name: str = ""
    children: tuple = ()

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Formula<{to_text(self)}>"


TRUE_F = Formula(TRUE)
FALSE_F = Formula(FALSE)


def atom(name: str) -> Formula:
    if not name or name in RESERVED_WORDS:
        raise ValueError(f"invalid atom name: {name!r}")
    return Formula(ATOM, name=name)


def neg(f: Formula) -> Formula:
    return Formula(NEG, children=(f,))


def conj(l: Formula, r: Formula) -> Formula:
    return Formula(AND, children=(l, r))


def disj(l: Formula, r: Formula) -> Formula:
    return Formula(OR, children=(l, r))


def impl(l: Formula, r: Formula) -> Formula:
    return Formula(IMPLIES, children=(l, r))


def box(f: Formula) -> Formula:
    return Formula(BOX, children=(f,))


def naf(f: Formula) -> Formula:
    return Formula(NAF, children=(f,))


def conjoin(formulas) -> Formula:
    """Left-associated conjunction; empty input yields true."""
    formulas = list(formulas)
    if not formulas:
        return TRUE_F
    return reduce(conj, formulas)


def atoms_of(f: Formula) -> frozenset:
    """Names of all propositional symbols occurring anywhere in f."""
    if f.kind == ATOM:
        return frozenset((f.name,))
    out = frozenset()
    for c in f.children:
        out |= atoms_of(c)
    return out


def alphabet_of(*formulas) -> tuple:
    """Sorted union of the atom names of the given formulas."""
    names = set()
    for f in formulas:
        names |= atoms_of(f)
    return tuple(sorted(names))


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class FormulaClass:
    depth: int
    is_flat: bool
    is_subjective: bool
    is_positive: bool
    is_negative: bool

    @property
    def is_objective(self):
        return self.depth == 0


def modal_depth(f: Formula) -> int:
    if f.kind in _MODAL:
        return 1 + modal_depth(f.children[0])
    if f.children:
        return max(modal_depth(c) for c in f.children)
    return 0


def _symbol_nestings(f: Formula, level=0, out=None):
    # modal-nesting count of every propositional symbol occurrence
    if out is None:
        out = []
    if f.kind == ATOM:
        out.append(level)
    else:
        bump = 1 if f.kind in _MODAL else 0
        for c in f.children:
            _symbol_nestings(c, level + bump, out)
    return out


def _contains(f: Formula, kind: str) -> bool:
    if f.kind == kind:
        return True
    return any(_contains(c, kind) for c in f.children)


def classify(f: Formula) -> FormulaClass:
    nestings = _symbol_nestings(f)
    return FormulaClass(
        depth=modal_depth(f),
        is_flat=all(n == 1 for n in nestings),
        is_subjective=all(n >= 1 for n in nestings),
        is_positive=not _contains(f, NAF),
        is_negative=not _contains(f, BOX),
    )


# ---------------------------------------------------------------------------
# printing


def to_text(f: Formula) -> str:
    """Canonical fully-parenthesized ASCII rendering; parse(to_text(f)) == f."""
    if f.kind == ATOM:
        return f.name
    if f.kind == TRUE:
        return "true"
    if f.kind == FALSE:
        return "false"
    if f.kind == NEG:
        return "~" + _arg(f.children[0])
    if f.kind == BOX:
        return "B" + _arg(f.children[0])
    if f.kind == NAF:
        return "not" + _arg(f.children[0])
    op = {AND: "&", OR: "|", IMPLIES: "->"}[f.kind]
    l, r = f.children
    return f"({to_text(l)} {op} {to_text(r)})"


def _arg(f: Formula) -> str:
    t = to_text(f)
    return t if t.startswith("(") else "(" + t + ")"


# ---------------------------------------------------------------------------
# parsing

_ALIASES = {"¬": "~", "∧": "&", "∨": "|"}  # ¬ ∧ ∨ (⊃ handled in lexer)

_IDENT_START = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_")
_IDENT_CONT = _IDENT_START | set("0123456789")


@dataclass
class _Token:
    kind: str  # one of: ( ) & | -> ~ B not true false ident eof
    text: str
    line: int
    column: int


def _tokenize(text: str):
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch in _ALIASES:
            tokens.append(_Token(_ALIASES[ch], ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == "⊃":  # ⊃
            tokens.append(_Token("->", ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch in "()&|~":
            tokens.append(_Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        if ch == "-":
            if i + 1 < n and text[i + 1] == ">":
                tokens.append(_Token("->", "->", line, start_col))
                i += 2
                col += 2
                continue
            raise ParseError("expected '->' after '-'", line, start_col)
        if ch in _IDENT_START:
            j = i
            while j < n and text[j] in _IDENT_CONT:
                j += 1
            word = text[i:j]
            kind = word if word in RESERVED_WORDS else "ident"
            tokens.append(_Token(kind, word, line, start_col))
            col += j - i
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.column)
        self.pos += 1
        return tok

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "->":
            self.take()
            return impl(left, self.formula())  # right associative
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek().kind == "|":
            self.take()
            f = disj(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek().kind == "&":
            self.take()
            f = conj(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "~":
            self.take()
            return neg(self.unary())
        if tok.kind == "B":
            self.take()
            return box(self.unary())
        if tok.kind == "not":
            self.take()
            return naf(self.unary())
        if tok.kind == "(":
            self.take()
            f = self.formula()
            self.take(")")
            return f
        if tok.kind == "true":
            self.take()
            return TRUE_F
        if tok.kind == "false":
            self.take()
            return FALSE_F
        if tok.kind == "ident":
            self.take()
            return atom(tok.text)
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.line, tok.column)


def parse(text: str) -> Formula:
    parser = _Parser(_tokenize(text))
    f = parser.formula()
    tok = parser.peek()
    if tok.kind != "eof":
        raise ParseError(f"trailing input starting at {tok.text!r}", tok.line, tok.column)
    return f
