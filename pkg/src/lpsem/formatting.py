"""Canonical text and JSON rendering.

Printing is deterministic and, for programs, inverse to parsing:
``parse(format_program(p))`` is structurally equal to ``p``.  Adjacent
reversed rule pairs print as one ``<->`` statement; nesting against the
grammar's associativity is parenthesized so trees survive a round trip.
Theory formulas may contain implications, printed as parenthesized
``<-cl`` / ``<-l`` infix; theories are display-only and not re-parsed.
"""

from __future__ import annotations

from typing import Union

from .semantics import Interpretation, Logic, Theory
from .syntax import (
    And,
    Atom,
    Const,
    Formula,
    Impl,
    ImplKind,
    Or,
    Program,
    Rule,
    StrongNeg,
    TOP,
    WeakNeg,
    atoms_of,
    classify,
)
from .transform import iff_groups

_OR, _AND, _UNARY, _ATOMIC = 0, 1, 2, 3

_IMPL_SIGN = {
    ImplKind.CLASSICAL: "<-cl",
    ImplKind.LUKASIEWICZ: "<-l",
    ImplKind.PROGRAM: "<-",
}


def _fmt(f: Formula, need: int) -> str:
    if isinstance(f, Const):
        return str(f.value)
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, StrongNeg):
        text, level = "-" + _fmt(f.operand, _UNARY), _UNARY
    elif isinstance(f, WeakNeg):
        text, level = "not " + _fmt(f.operand, _UNARY), _UNARY
    elif isinstance(f, And):
        text = _fmt(f.left, _AND) + ", " + _fmt(f.right, _UNARY)
        level = _AND
    elif isinstance(f, Or):
        text = _fmt(f.left, _OR) + "; " + _fmt(f.right, _AND)
        level = _OR
    elif isinstance(f, Impl):
        sign = _IMPL_SIGN[f.kind]
        return f"({_fmt(f.head, _OR)} {sign} {_fmt(f.body, _OR)})"
    else:
        raise TypeError(f"not a formula: {f!r}")
    return f"({text})" if level < need else text


def format_formula(f: Formula) -> str:
    return _fmt(f, _OR)


def format_rule(r: Rule) -> str:
    if r.body == TOP:
        return f"{format_formula(r.head)}."
    return f"{format_formula(r.head)} :- {format_formula(r.body)}."


def format_program(p: Program) -> str:
    lines = []
    extra = p.declared_atoms
    if extra:
        lines.append("#atoms " + ", ".join(sorted(a.name for a in extra)) + ".")
    for group in iff_groups(p.rules):
        if len(group) == 2:
            head, body = group[0].head, group[0].body
            lines.append(f"{format_formula(head)} <-> {format_formula(body)}.")
        else:
            lines.append(format_rule(group[0]))
    return "\n".join(lines)


def format_theory(t: Theory) -> str:
    return "\n".join(sorted(f"{format_formula(f)}." for f in t.formulas))


def format_model(i: Interpretation) -> str:
    return str(i)


def model_to_json(i: Interpretation) -> list[str]:
    return [str(l) for l in sorted(i.literals())]


def unknown_atoms(i: Interpretation, alphabet: frozenset[Atom]) -> list[str]:
    return sorted(a.name for a in alphabet - i.true_atoms - i.false_atoms)


def program_to_json(p: Program) -> dict:
    flags = classify(p)
    return {
        "atoms": sorted(a.name for a in atoms_of(p)),
        "declared_atoms": sorted(a.name for a in p.declared_atoms),
        "rules": [
            {"head": format_formula(r.head), "body": format_formula(r.body)}
            for r in p
        ],
        "classification": {
            "basic": flags.basic,
            "regular": flags.regular,
            "normal_nested": flags.normal_nested,
            "extended": flags.extended,
            "normal": flags.normal,
            "wc_normal": flags.wc_normal,
        },
        "text": format_program(p),
    }


def theory_to_json(t: Theory) -> dict:
    return {
        "logic": t.logic.value,
        "formulas": sorted(format_formula(f) for f in t.formulas),
    }


def format_result(value: Union[Program, Theory]) -> str:
    if isinstance(value, Program):
        return format_program(value)
    return format_theory(value)
