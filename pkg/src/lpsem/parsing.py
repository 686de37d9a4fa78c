"""Parser for the rule text format.

Grammar (whitespace and ``%`` line comments are skipped)::

    program     := (declaration | statement)*
    declaration := '#atoms' ident (',' ident)* '.'
    statement   := formula ((':-' | '<->') formula)? '.'
    formula     := conjunction (';' conjunction)*     disjunction
    conjunction := unary (',' unary)*
    unary       := '-' unary | 'not' unary | primary
    primary     := ident | 'true' | 'false' | 'unknown' | '(' formula ')'

``head :- body.`` is a rule, ``head.`` a fact (body ``true``), and
``left <-> right.`` sugar for the two rules ``left :- right.`` and
``right :- left.``.  Atom names match ``[a-z][a-zA-Z0-9_]*`` and must
not be one of the keywords.  Implications inside formulas are not part
of the input grammar; theories are output-only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .semantics import Interpretation
from .syntax import (
    And,
    Atom,
    BOT,
    Const,
    Formula,
    Literal,
    Or,
    Program,
    Rule,
    StrongNeg,
    TOP,
    TruthValue,
    UNK,
    WeakNeg,
)

_TOKEN = re.compile(
    r"""(?P<ws>\s+)
      | (?P<comment>%[^\n]*)
      | (?P<ident>[a-z][a-zA-Z0-9_]*)
      | (?P<sym><->|:-|[.,;()\-{}\#])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"true", "false", "unknown", "not"}
_CONSTS = {"true": TOP, "false": BOT, "unknown": UNK}


@dataclass(frozen=True)
class Token:
    kind: str  # 'ident', 'sym', 'end'
    value: str
    line: int
    column: int


@dataclass(frozen=True)
class RuleSource:
    """Source position of the statement a rule came from."""

    line: int
    column: int
    text: str
    weak_neg_line: Optional[int] = None
    weak_neg_column: Optional[int] = None


@dataclass(frozen=True)
class SourceProgram:
    """A parsed program together with per-rule source positions."""

    text: str
    program: Program
    sources: dict[Rule, RuleSource]
    path: Optional[str] = None


def _tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            col = pos - line_start + 1
            ch = text[pos]
            hint = ""
            if ch.isalpha():
                hint = " (atom names start with a lowercase letter)"
            raise ParseError(line, col, f"unexpected character {ch!r}{hint}")
        if m.lastgroup in ("ident", "sym"):
            tokens.append(
                Token(m.lastgroup, m.group(), line, m.start() - line_start + 1)
            )
        newlines = m.group().count("\n")
        if newlines:
            line += newlines
            line_start = m.start() + m.group().rindex("\n") + 1
        pos = m.end()
    col = pos - line_start + 1
    tokens.append(Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.weak_neg_at: Optional[tuple[int, int]] = None

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def next(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str) -> Token:
        tok = self.peek()
        if tok.kind == "sym" and tok.value == value:
            return self.next()
        self.fail(f"expected {value!r}")

    def fail(self, message: str):
        tok = self.peek()
        found = repr(tok.value) if tok.kind != "end" else "end of input"
        raise ParseError(tok.line, tok.column, f"{message}, found {found}")

    # formulas ---------------------------------------------------------

    def formula(self) -> Formula:
        out = self.conjunction()
        while self.peek().kind == "sym" and self.peek().value == ";":
            self.next()
            out = Or(out, self.conjunction())
        return out

    def conjunction(self) -> Formula:
        out = self.unary()
        while self.peek().kind == "sym" and self.peek().value == ",":
            self.next()
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "sym" and tok.value == "-":
            self.next()
            return StrongNeg(self.unary())
        if tok.kind == "ident" and tok.value == "not":
            self.next()
            if self.weak_neg_at is None:
                self.weak_neg_at = (tok.line, tok.column)
            return WeakNeg(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "sym" and tok.value == "(":
            self.next()
            out = self.formula()
            self.expect(")")
            return out
        if tok.kind == "ident":
            if tok.value in _CONSTS:
                self.next()
                return _CONSTS[tok.value]
            self.next()
            return Atom(tok.value)
        self.fail("expected a formula")

    # statements -------------------------------------------------------

    def declaration(self) -> frozenset[Atom]:
        self.expect("#")
        tok = self.peek()
        if tok.kind != "ident" or tok.value != "atoms":
            self.fail("expected 'atoms' after '#'")
        self.next()
        atoms = [self._declared_atom()]
        while self.peek().kind == "sym" and self.peek().value == ",":
            self.next()
            atoms.append(self._declared_atom())
        self.expect(".")
        return frozenset(atoms)

    def _declared_atom(self) -> Atom:
        tok = self.peek()
        if tok.kind != "ident" or tok.value in _KEYWORDS:
            self.fail("expected an atom name")
        self.next()
        return Atom(tok.value)

    def statement(self) -> tuple[list[Rule], RuleSource]:
        start = self.peek()
        self.weak_neg_at = None
        head = self.formula()
        rules: list[Rule]
        tok = self.peek()
        if tok.kind == "sym" and tok.value == ":-":
            self.next()
            rules = [Rule(head, self.formula())]
        elif tok.kind == "sym" and tok.value == "<->":
            self.next()
            body = self.formula()
            rules = [Rule(head, body), Rule(body, head)]
        else:
            rules = [Rule(head, TOP)]
        end = self.expect(".")
        text = self._slice(start, end)
        wline, wcol = self.weak_neg_at or (None, None)
        return rules, RuleSource(start.line, start.column, text, wline, wcol)

    def _slice(self, start: Token, end: Token) -> str:
        lines = self.text.split("\n")
        if start.line == end.line:
            return lines[start.line - 1][start.column - 1 : end.column]
        chunk = [lines[start.line - 1][start.column - 1 :]]
        chunk += lines[start.line : end.line - 1]
        chunk.append(lines[end.line - 1][: end.column])
        return " ".join(part.strip() for part in chunk)

    def program(self) -> tuple[Program, dict[Rule, RuleSource]]:
        rules: list[Rule] = []
        sources: dict[Rule, RuleSource] = {}
        declared: set[Atom] = set()
        while self.peek().kind != "end":
            if self.peek().kind == "sym" and self.peek().value == "#":
                declared |= self.declaration()
                continue
            parsed, source = self.statement()
            for r in parsed:
                rules.append(r)
                sources.setdefault(r, source)
        return Program(tuple(rules), frozenset(declared)), sources


def parse_source(text: str, path: Optional[str] = None) -> SourceProgram:
    """Parse the text format, keeping source positions for diagnostics."""
    parser = _Parser(text)
    program, sources = parser.program()
    return SourceProgram(text, program, sources, path)


def parse(text: str) -> Program:
    """Parse the text format into a program."""
    return parse_source(text).program


def parse_interpretation(text: str) -> Interpretation:
    """Parse a literal set such as ``{a, -b}`` into an interpretation."""
    parser = _Parser(text)
    parser.expect("{")
    literals: list[Literal] = []
    if not (parser.peek().kind == "sym" and parser.peek().value == "}"):
        literals.append(_literal(parser))
        while parser.peek().kind == "sym" and parser.peek().value == ",":
            parser.next()
            literals.append(_literal(parser))
    parser.expect("}")
    tok = parser.peek()
    if tok.kind != "end":
        parser.fail("expected end of input")
    try:
        return Interpretation.from_literals(literals)
    except ValueError as e:
        raise ParseError(1, 1, str(e)) from e


def _literal(parser: _Parser) -> Literal:
    negated = False
    if parser.peek().kind == "sym" and parser.peek().value == "-":
        parser.next()
        negated = True
    tok = parser.peek()
    if tok.kind != "ident" or tok.value in _KEYWORDS:
        parser.fail("expected an atom name")
    parser.next()
    return Literal(Atom(tok.value), negated)
