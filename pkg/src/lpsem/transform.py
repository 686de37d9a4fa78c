"""Program-to-program and program-to-theory transformations.

* ``as_n_theory`` / ``as_l_theory`` retag the syntactic rule arrow as
  classical or Lukasiewicz implication; adjacent reversed rule pairs
  (the stored form of a biconditional) become one conjunction of the
  two implications.
* ``merge_definitions`` joins all rules defining a literal into a
  single rule whose body disjoins the defining bodies in source order.
* ``weak_completion`` turns every merged definition into a
  biconditional, stored as the two directed rules.
* ``definition_completion`` keeps the program and adds, per merged
  definition ``L <- body``, the contrapositive-style rule
  ``~L <- ~body``; double strong negations produced on negative-literal
  heads are kept verbatim and disappear under ``regularize_program``.
* ``vakarelov_translate`` embeds a Lukasiewicz theory into the
  strong-negation extension of classical logic.
"""

from __future__ import annotations

from .errors import LogicError
from .semantics import Logic, Theory
from .syntax import (
    And,
    Atom,
    Formula,
    Impl,
    ImplKind,
    Literal,
    Or,
    Program,
    Rule,
    StrongNeg,
    WeakNeg,
    atoms_of,
    disj,
    head_literals,
    is_literal_formula,
    literal_of,
    require_normal_nested,
    subformulas,
)

RulePair = tuple[Rule, ...]


def iff_groups(rules: tuple[Rule, ...]) -> list[RulePair]:
    """Group adjacent reversed rule pairs, preserving order.

    A pair ``(h <- b, b <- h)`` with ``h != b`` is one group of two;
    every other rule is a group of one.  Printers and theory builders
    use this to render stored biconditionals as single items.
    """
    groups: list[RulePair] = []
    k = 0
    while k < len(rules):
        r = rules[k]
        if (
            k + 1 < len(rules)
            and r.head != r.body
            and rules[k + 1] == r.reversed()
        ):
            groups.append((r, rules[k + 1]))
            k += 2
        else:
            groups.append((r,))
            k += 1
    return groups


def _theory_of(p: Program, kind: ImplKind, logic: Logic) -> Theory:
    formulas: set[Formula] = set()
    for group in iff_groups(p.rules):
        first = Impl(kind, group[0].head, group[0].body)
        if len(group) == 2:
            formulas.add(And(first, Impl(kind, group[1].head, group[1].body)))
        else:
            formulas.add(first)
    return Theory(frozenset(formulas), logic)


def as_n_theory(p: Program) -> Theory:
    """Retag every rule arrow as classical implication."""
    return _theory_of(p, ImplKind.CLASSICAL, Logic.NELSON)


def as_l_theory(p: Program) -> Theory:
    """Retag every rule arrow as Lukasiewicz implication.

    Rejects programs containing weak negation, which has no
    Lukasiewicz reading.
    """
    for r in p:
        for f in (r.head, r.body):
            if any(isinstance(g, WeakNeg) for g in subformulas(f)):
                raise LogicError(
                    "weak negation cannot appear in a Lukasiewicz theory"
                )
    return _theory_of(p, ImplKind.LUKASIEWICZ, Logic.LUKASIEWICZ)


def defining_rules(p: Program, literal: Literal) -> list[Rule]:
    """Rules of a normal nested program whose head is ``literal``."""
    require_normal_nested(p, "defining_rules")
    target = literal.as_formula()
    return [r for r in p if r.head == target]


def undefined_literals(p: Program) -> frozenset[Literal]:
    """Literals over the program alphabet that head no rule."""
    require_normal_nested(p, "undefined_literals")
    alphabet = atoms_of(p)
    every = {Literal(a, neg) for a in alphabet for neg in (False, True)}
    return frozenset(every - head_literals(p))


def _definition_order(p: Program) -> list[tuple[Literal, list[Rule]]]:
    order: list[Literal] = []
    bodies: dict[Literal, list[Rule]] = {}
    for r in p:
        lit = literal_of(r.head)
        if lit not in bodies:
            order.append(lit)
            bodies[lit] = []
        bodies[lit].append(r)
    return [(lit, bodies[lit]) for lit in order]


def merge_definitions(p: Program) -> Program:
    """One rule per defined literal, body disjoined in source order."""
    require_normal_nested(p, "merge_definitions")
    merged = [
        Rule(lit.as_formula(), disj([r.body for r in rules]))
        for lit, rules in _definition_order(p)
    ]
    return Program(tuple(merged), p.declared_atoms)


def weak_completion(p: Program) -> Program:
    """Merged definitions strengthened to biconditionals.

    Each merged rule ``L <- body`` is stored as the adjacent pair
    ``L <- body`` and ``body <- L``; undefined literals get no rule and
    therefore stay unknown under the Lukasiewicz reading.
    """
    out: list[Rule] = []
    for r in merge_definitions(p):
        out.append(r)
        out.append(r.reversed())
    return Program(tuple(out), p.declared_atoms)


def definition_completion(p: Program) -> Program:
    """The program plus rules forcing defined literals false.

    For each merged definition ``L <- body`` the rule
    ``~L <- ~body`` is appended, so a defined literal becomes false
    whenever all its defining bodies are false.
    """
    added = [
        Rule(StrongNeg(r.head), StrongNeg(r.body))
        for r in merge_definitions(p)
    ]
    return Program(p.rules + tuple(added), p.declared_atoms)


def _translate(f: Formula) -> Formula:
    if isinstance(f, StrongNeg):
        return StrongNeg(_translate(f.operand))
    if isinstance(f, And):
        return And(_translate(f.left), _translate(f.right))
    if isinstance(f, Or):
        return Or(_translate(f.left), _translate(f.right))
    if isinstance(f, Impl) and f.kind is ImplKind.LUKASIEWICZ:
        head = _translate(f.head)
        body = _translate(f.body)
        return And(
            Impl(ImplKind.CLASSICAL, head, body),
            Impl(ImplKind.CLASSICAL, StrongNeg(body), StrongNeg(head)),
        )
    return f


def vakarelov_translate(t: Theory) -> Theory:
    """Embed a Lukasiewicz theory into classical logic with strong negation.

    Every Lukasiewicz implication ``h <-l b``, innermost first, becomes
    ``(h <-cl b) and (~b <-cl ~h)``; all other connectives are kept.
    The embedding preserves the truth value of every formula, hence the
    models of the theory.
    """
    if t.logic is not Logic.LUKASIEWICZ:
        raise LogicError("vakarelov_translate expects a Lukasiewicz theory")
    return Theory(frozenset(_translate(f) for f in t.formulas), Logic.NELSON)
