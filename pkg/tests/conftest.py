"""Shared fixtures: the suppression-task programs built from raw AST."""

import pytest

from lpsem import (
    And,
    Atom,
    BOT,
    Interpretation,
    Literal,
    Program,
    Rule,
    StrongNeg,
    TOP,
)


def atom(name):
    return Atom(name)


def lit(name, negated=False):
    return Literal(Atom(name), negated)


def interp(true=(), false=()):
    return Interpretation(
        frozenset(Atom(n) for n in true), frozenset(Atom(n) for n in false)
    )


E, L, T = Atom("e"), Atom("l"), Atom("t")
AB1, AB2 = Atom("ab1"), Atom("ab2")


@pytest.fixture
def p1():
    # l <- e and ~ab1;  e <- false;  ab1 <- false
    return Program(
        (
            Rule(L, And(E, StrongNeg(AB1))),
            Rule(E, BOT),
            Rule(AB1, BOT),
        )
    )


@pytest.fixture
def p2(p1):
    return Program(p1.rules + (Rule(E, TOP),))


@pytest.fixture
def p3():
    return Program(
        (
            Rule(L, And(E, StrongNeg(AB1))),
            Rule(L, And(T, StrongNeg(AB2))),
            Rule(E, BOT),
            Rule(AB1, BOT),
            Rule(AB2, BOT),
        )
    )


@pytest.fixture
def p4():
    # l <- e and ~ab1;  ~e;  ~ab1
    return Program(
        (
            Rule(L, And(E, StrongNeg(AB1))),
            Rule(StrongNeg(E), TOP),
            Rule(StrongNeg(AB1), TOP),
        )
    )
