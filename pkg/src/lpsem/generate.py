"""Seeded random generation of programs and formulas.

All generation goes through a single ``random.Random`` stream, so a
given seed always yields the same output.  Program classes:

* ``wc_normal``      atom heads; bodies are conjunctions of literals,
                     ``true`` (facts), or ``false`` (assumptions);
* ``normal_nested``  literal heads, implication-free bodies (weak
                     negation allowed);
* ``basic``          heads and bodies over ``{and, or, ~}``;
* ``regular``        strong negation only on atoms, weak negation free.
"""

from __future__ import annotations

import random
import string
from typing import Optional, Sequence

from .errors import GenerationError
from .syntax import (
    And,
    Atom,
    BOT,
    Formula,
    Impl,
    ImplKind,
    Literal,
    Or,
    Program,
    Rule,
    StrongNeg,
    TOP,
    UNK,
    WeakNeg,
    conj,
)

PROGRAM_CLASSES = ("wc_normal", "normal_nested", "basic", "regular")


def atom_pool(count: int) -> list[Atom]:
    """The first ``count`` single-letter atoms ``a``, ``b``, ...."""
    if count > len(string.ascii_lowercase):
        raise GenerationError(f"at most {len(string.ascii_lowercase)} atoms")
    return [Atom(c) for c in string.ascii_lowercase[:count]]


def random_literal(rng: random.Random, atoms: Sequence[Atom]) -> Formula:
    return Literal(rng.choice(atoms), rng.random() < 0.5).as_formula()


def _random_leaf(
    rng: random.Random, atoms: Sequence[Atom], const_weight: float
) -> Formula:
    if rng.random() < const_weight:
        return rng.choice((TOP, BOT, UNK))
    return rng.choice(atoms)


def random_basic_formula(
    rng: random.Random, atoms: Sequence[Atom], depth: int
) -> Formula:
    """Formula over ``{and, or, ~}`` plus atoms and constants."""
    if depth <= 0 or rng.random() < 0.3:
        return _random_leaf(rng, atoms, const_weight=0.15)
    pick = rng.random()
    if pick < 0.25:
        return StrongNeg(random_basic_formula(rng, atoms, depth - 1))
    left = random_basic_formula(rng, atoms, depth - 1)
    right = random_basic_formula(rng, atoms, depth - 1)
    return And(left, right) if pick < 0.65 else Or(left, right)


def random_implication_free(
    rng: random.Random, atoms: Sequence[Atom], depth: int
) -> Formula:
    """Adds weak negation to the basic connectives."""
    if depth <= 0 or rng.random() < 0.3:
        return _random_leaf(rng, atoms, const_weight=0.15)
    pick = rng.random()
    if pick < 0.2:
        return StrongNeg(random_implication_free(rng, atoms, depth - 1))
    if pick < 0.35:
        return WeakNeg(random_implication_free(rng, atoms, depth - 1))
    left = random_implication_free(rng, atoms, depth - 1)
    right = random_implication_free(rng, atoms, depth - 1)
    return And(left, right) if pick < 0.7 else Or(left, right)


def random_regular_formula(
    rng: random.Random, atoms: Sequence[Atom], depth: int
) -> Formula:
    """Strong negation appears only directly on atoms."""
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.1:
            return rng.choice((TOP, BOT, UNK))
        return random_literal(rng, atoms)
    pick = rng.random()
    if pick < 0.2:
        return WeakNeg(random_regular_formula(rng, atoms, depth - 1))
    left = random_regular_formula(rng, atoms, depth - 1)
    right = random_regular_formula(rng, atoms, depth - 1)
    return And(left, right) if pick < 0.65 else Or(left, right)


def random_l_formula(
    rng: random.Random, atoms: Sequence[Atom], depth: int
) -> Formula:
    """Lukasiewicz formula: ``{~, and, or, <-l}`` over atoms and constants."""
    if depth <= 0 or rng.random() < 0.25:
        return _random_leaf(rng, atoms, const_weight=0.2)
    pick = rng.random()
    if pick < 0.2:
        return StrongNeg(random_l_formula(rng, atoms, depth - 1))
    left = random_l_formula(rng, atoms, depth - 1)
    right = random_l_formula(rng, atoms, depth - 1)
    if pick < 0.5:
        return And(left, right)
    if pick < 0.75:
        return Or(left, right)
    return Impl(ImplKind.LUKASIEWICZ, left, right)


def _wc_normal_rule(rng: random.Random, atoms: Sequence[Atom]) -> Rule:
    head = rng.choice(atoms)
    pick = rng.random()
    if pick < 0.25:
        return Rule(head, BOT)
    if pick < 0.4:
        return Rule(head, TOP)
    literals = [
        Literal(rng.choice(atoms), rng.random() < 0.5).as_formula()
        for _ in range(rng.randint(1, 3))
    ]
    return Rule(head, conj(literals))


def _normal_nested_rule(rng: random.Random, atoms: Sequence[Atom]) -> Rule:
    return Rule(random_literal(rng, atoms), random_implication_free(rng, atoms, 3))


def _basic_rule(rng: random.Random, atoms: Sequence[Atom]) -> Rule:
    return Rule(
        random_basic_formula(rng, atoms, 2), random_basic_formula(rng, atoms, 3)
    )


def _regular_rule(rng: random.Random, atoms: Sequence[Atom]) -> Rule:
    return Rule(
        random_regular_formula(rng, atoms, 2),
        random_regular_formula(rng, atoms, 3),
    )


_RULE_MAKERS = {
    "wc_normal": _wc_normal_rule,
    "normal_nested": _normal_nested_rule,
    "basic": _basic_rule,
    "regular": _regular_rule,
}


def generate_program(
    atoms: int,
    rules: int,
    program_class: str,
    seed: int,
    rng: Optional[random.Random] = None,
) -> Program:
    """Pseudo-random program of the requested class.

    The same arguments always produce the same program.  Duplicate
    rules collapse, so the rule count is an upper bound.
    """
    if program_class not in _RULE_MAKERS:
        raise GenerationError(
            f"unknown program class {program_class!r}; "
            f"expected one of {', '.join(PROGRAM_CLASSES)}"
        )
    if rules < 0 or atoms < 0:
        raise GenerationError("atom and rule counts must be nonnegative")
    if rules > 0 and atoms == 0:
        raise GenerationError("cannot generate rules over an empty alphabet")
    rng = rng if rng is not None else random.Random(seed)
    pool = atom_pool(atoms)
    maker = _RULE_MAKERS[program_class]
    return Program(tuple(maker(rng, pool) for _ in range(rules)))


def random_basic_normal_nested(
    rng: random.Random, atoms: Sequence[Atom], rules: int
) -> Program:
    """Literal heads over weak-negation-free bodies; facts are common,
    so complementary pairs and inconsistency do occur."""
    out = []
    for _ in range(rules):
        head = random_literal(rng, atoms)
        if rng.random() < 0.3:
            body: Formula = rng.choice((TOP, BOT))
        else:
            body = random_basic_formula(rng, atoms, 2)
        out.append(Rule(head, body))
    return Program(tuple(out))


def random_single_polarity_program(
    rng: random.Random, atoms: Sequence[Atom], rules: int
) -> Program:
    """Basic normal nested where each atom heads at most one polarity.

    Atoms defined in both polarities break the paired-equivalence
    structure that the completed definition completion relies on, so
    the correspondence checks use this family.
    """
    polarity = {a: rng.random() < 0.35 for a in atoms}
    out = []
    for _ in range(rules):
        a = rng.choice(atoms)
        head = Literal(a, polarity[a]).as_formula()
        if rng.random() < 0.3:
            body: Formula = rng.choice((TOP, BOT))
        else:
            body = random_basic_formula(rng, atoms, 2)
        out.append(Rule(head, body))
    return Program(tuple(out))
