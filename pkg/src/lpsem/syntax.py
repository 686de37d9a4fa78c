"""Core syntax: atoms, literals, formulas, rules, programs.

Formulas are immutable trees over atoms and the three truth constants,
built from strong negation, weak (default) negation, conjunction,
disjunction, and tagged implications.  Three implication tags exist:

* ``CLASSICAL``   evaluated by the material-implication truth table,
* ``LUKASIEWICZ`` evaluated by the three-valued Lukasiewicz table,
* ``PROGRAM``     the purely syntactic rule arrow of logic programs; it
  carries no semantics and must be retagged (see :mod:`lpsem.transform`)
  before evaluation.

Rules pair an implication-free head with an implication-free body.  A
program is an ordered, duplicate-free sequence of rules plus an optional
set of declared atoms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Iterable, Iterator, Union

from .errors import LogicError, ProgramClassError

_ATOM_NAME = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
_RESERVED = frozenset({"not", "true", "false", "unknown"})


class TruthValue(IntEnum):
    """Three-valued truth domain, ordered by truth: FALSE < UNKNOWN < TRUE."""

    FALSE = 0
    UNKNOWN = 1
    TRUE = 2

    def __str__(self) -> str:
        return {0: "false", 1: "unknown", 2: "true"}[int(self)]


class ImplKind(Enum):
    """Tag selecting the implication semantics of an ``Impl`` node."""

    CLASSICAL = "cl"
    LUKASIEWICZ = "l"
    PROGRAM = "lp"


@dataclass(frozen=True, order=True)
class Atom:
    """Propositional atom; equality and ordering are by name."""

    name: str

    def __post_init__(self):
        if not _ATOM_NAME.match(self.name) or self.name in _RESERVED:
            raise ValueError(f"invalid atom name: {self.name!r}")

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, order=True)
class Literal:
    """An atom or its strong negation."""

    atom: Atom
    negated: bool = False

    def complement(self) -> "Literal":
        return Literal(self.atom, not self.negated)

    def as_formula(self) -> "Formula":
        return StrongNeg(self.atom) if self.negated else self.atom

    def __str__(self) -> str:
        return ("-" if self.negated else "") + self.atom.name


@dataclass(frozen=True)
class Const:
    value: TruthValue


@dataclass(frozen=True)
class StrongNeg:
    operand: "Formula"


@dataclass(frozen=True)
class WeakNeg:
    operand: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Impl:
    """Tagged implication ``head <- body`` (head first, as in rule notation)."""

    kind: ImplKind
    head: "Formula"
    body: "Formula"


Formula = Union[Const, Atom, StrongNeg, WeakNeg, And, Or, Impl]

TOP = Const(TruthValue.TRUE)
BOT = Const(TruthValue.FALSE)
UNK = Const(TruthValue.UNKNOWN)


def conj(parts: Iterable[Formula]) -> Formula:
    """Left-associated conjunction of one or more formulas."""
    parts = list(parts)
    if not parts:
        raise ValueError("conj of no formulas")
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def disj(parts: Iterable[Formula]) -> Formula:
    """Left-associated disjunction of one or more formulas."""
    parts = list(parts)
    if not parts:
        raise ValueError("disj of no formulas")
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


def iff_formula(kind: ImplKind, left: Formula, right: Formula) -> Formula:
    """Biconditional, stored as the conjunction of the two implications."""
    return And(Impl(kind, left, right), Impl(kind, right, left))


def subformulas(f: Formula) -> Iterator[Formula]:
    """All subformula occurrences of ``f``, including ``f`` itself."""
    stack = [f]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (StrongNeg, WeakNeg)):
            stack.append(node.operand)
        elif isinstance(node, (And, Or)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Impl):
            stack.append(node.head)
            stack.append(node.body)


def atoms_in(f: Formula) -> frozenset[Atom]:
    return frozenset(g for g in subformulas(f) if isinstance(g, Atom))


def literals_in(f: Formula) -> frozenset[Literal]:
    """Literal occurrences in ``f``.

    A strong negation directly on an atom is one negative-literal
    occurrence; the atom under it is not counted separately.  Literals
    under weak negation are included.
    """
    out: set[Literal] = set()
    stack = [f]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(Literal(node))
        elif isinstance(node, StrongNeg):
            if isinstance(node.operand, Atom):
                out.add(Literal(node.operand, negated=True))
            else:
                stack.append(node.operand)
        elif isinstance(node, WeakNeg):
            stack.append(node.operand)
        elif isinstance(node, (And, Or)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Impl):
            stack.append(node.head)
            stack.append(node.body)
    return frozenset(out)


def is_implication_free(f: Formula) -> bool:
    return not any(isinstance(g, Impl) for g in subformulas(f))


def is_basic(f: Formula) -> bool:
    """Implication-free and without weak negation: connectives {and, or, ~}."""
    return not any(isinstance(g, (Impl, WeakNeg)) for g in subformulas(f))


def is_regular(f: Formula) -> bool:
    """Strong negation occurs only immediately in front of atoms."""
    return all(
        isinstance(g.operand, Atom)
        for g in subformulas(f)
        if isinstance(g, StrongNeg)
    )


def is_literal_formula(f: Formula) -> bool:
    return isinstance(f, Atom) or (
        isinstance(f, StrongNeg) and isinstance(f.operand, Atom)
    )


def literal_of(f: Formula) -> Literal:
    if isinstance(f, Atom):
        return Literal(f)
    if isinstance(f, StrongNeg) and isinstance(f.operand, Atom):
        return Literal(f.operand, negated=True)
    raise ValueError(f"not a literal formula: {f!r}")


@dataclass(frozen=True)
class Rule:
    """``head <- body`` with implication-free head and body."""

    head: Formula
    body: Formula

    def __post_init__(self):
        if not is_implication_free(self.head) or not is_implication_free(self.body):
            raise ValueError("rule heads and bodies must be implication-free")

    def reversed(self) -> "Rule":
        return Rule(self.body, self.head)

    @property
    def is_fact(self) -> bool:
        return self.body == TOP


def fact(head: Formula) -> Rule:
    return Rule(head, TOP)


@dataclass(frozen=True)
class Program:
    """Ordered, duplicate-free rule sequence with optional declared atoms.

    Rule order is preserved for deterministic printing; it never affects
    semantics.  Duplicates are dropped, keeping first occurrences.
    """

    rules: tuple[Rule, ...] = ()
    declared_atoms: frozenset[Atom] = field(default_factory=frozenset)

    def __post_init__(self):
        seen: dict[Rule, None] = {}
        for r in self.rules:
            seen.setdefault(r)
        object.__setattr__(self, "rules", tuple(seen))
        object.__setattr__(self, "declared_atoms", frozenset(self.declared_atoms))

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)


def atoms_of(p: Program) -> frozenset[Atom]:
    """Atoms occurring in heads or bodies, unioned with declared atoms."""
    out = set(p.declared_atoms)
    for r in p:
        out |= atoms_in(r.head)
        out |= atoms_in(r.body)
    return frozenset(out)


def head_literals(p: Program) -> frozenset[Literal]:
    out: set[Literal] = set()
    for r in p:
        out |= literals_in(r.head)
    return frozenset(out)


def body_literals(p: Program) -> frozenset[Literal]:
    out: set[Literal] = set()
    for r in p:
        out |= literals_in(r.body)
    return frozenset(out)


@dataclass(frozen=True)
class ProgramClass:
    """Program classification flags; each is the conjunction of per-rule checks."""

    basic: bool
    regular: bool
    normal_nested: bool
    extended: bool
    normal: bool
    wc_normal: bool


def _is_extended_body(f: Formula) -> bool:
    # top or a conjunction of literals / weak-negated literals
    if f == TOP:
        return True

    def conj_ok(g: Formula) -> bool:
        if isinstance(g, And):
            return conj_ok(g.left) and conj_ok(g.right)
        if isinstance(g, WeakNeg):
            return is_literal_formula(g.operand)
        return is_literal_formula(g)

    return conj_ok(f)


def _rule_class(r: Rule) -> ProgramClass:
    basic = is_basic(r.head) and is_basic(r.body)
    regular = is_regular(r.head) and is_regular(r.body)
    normal_nested = is_literal_formula(r.head)
    extended = normal_nested and _is_extended_body(r.body)
    normal = extended and isinstance(r.head, Atom)
    assumption = isinstance(r.head, Atom) and r.body == BOT
    wc_normal = (normal and is_basic(r.body)) or assumption
    return ProgramClass(basic, regular, normal_nested, extended, normal, wc_normal)


def classify(p: Program) -> ProgramClass:
    flags = [_rule_class(r) for r in p]
    return ProgramClass(
        basic=all(f.basic for f in flags),
        regular=all(f.regular for f in flags),
        normal_nested=all(f.normal_nested for f in flags),
        extended=all(f.extended for f in flags),
        normal=all(f.normal for f in flags),
        wc_normal=all(f.wc_normal for f in flags),
    )


_CONST_STRONG_NEG = {
    TruthValue.TRUE: BOT,
    TruthValue.FALSE: TOP,
    TruthValue.UNKNOWN: UNK,
}


def regularize(f: Formula) -> Formula:
    """Push strong negation down to atoms (Vorob'ev rewriting).

    The result is equivalent in the strong-negation extension of
    classical logic and contains strong negation only directly on atoms;
    strongly negated truth constants are folded (``~true`` to ``false``,
    ``~false`` to ``true``, ``~unknown`` to ``unknown``).  Idempotent.
    Lukasiewicz- or program-tagged implications are rejected.
    """
    if isinstance(f, (Const, Atom)):
        return f
    if isinstance(f, StrongNeg):
        return _regularize_negated(f.operand)
    if isinstance(f, WeakNeg):
        return WeakNeg(regularize(f.operand))
    if isinstance(f, And):
        return And(regularize(f.left), regularize(f.right))
    if isinstance(f, Or):
        return Or(regularize(f.left), regularize(f.right))
    if isinstance(f, Impl) and f.kind is ImplKind.CLASSICAL:
        return Impl(f.kind, regularize(f.head), regularize(f.body))
    raise LogicError(f"cannot regularize an implication tagged {f.kind.value!r}")


def _regularize_negated(f: Formula) -> Formula:
    # regularized form of StrongNeg(f)
    if isinstance(f, Const):
        return _CONST_STRONG_NEG[f.value]
    if isinstance(f, Atom):
        return StrongNeg(f)
    if isinstance(f, StrongNeg):
        return regularize(f.operand)
    if isinstance(f, WeakNeg):
        return regularize(f.operand)
    if isinstance(f, And):
        return Or(_regularize_negated(f.left), _regularize_negated(f.right))
    if isinstance(f, Or):
        return And(_regularize_negated(f.left), _regularize_negated(f.right))
    if isinstance(f, Impl) and f.kind is ImplKind.CLASSICAL:
        return And(_regularize_negated(f.head), regularize(f.body))
    raise LogicError(f"cannot regularize an implication tagged {f.kind.value!r}")


def regularize_program(p: Program) -> Program:
    """Rule-wise regularization; the result classifies as regular."""
    return Program(
        tuple(Rule(regularize(r.head), regularize(r.body)) for r in p),
        p.declared_atoms,
    )


def require_normal_nested(p: Program, operation: str) -> None:
    if not classify(p).normal_nested:
        raise ProgramClassError(f"{operation} requires a normal nested program "
                                "(every rule head must be a literal)")


def require_regular(p: Program, operation: str) -> None:
    if not classify(p).regular:
        raise ProgramClassError(f"{operation} requires a regular program "
                                "(strong negation only directly on atoms)")
