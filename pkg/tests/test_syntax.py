"""Syntax layer: classification, structural queries, regularization."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpsem import (
    And,
    Atom,
    BOT,
    Const,
    Impl,
    ImplKind,
    Interpretation,
    Literal,
    Logic,
    LogicError,
    Or,
    Program,
    Rule,
    StrongNeg,
    TOP,
    TruthValue,
    UNK,
    WeakNeg,
    all_interpretations,
    atoms_of,
    body_literals,
    classify,
    evaluate,
    head_literals,
    is_basic,
    is_implication_free,
    is_regular,
    regularize,
    regularize_program,
)
from lpsem.syntax import atoms_in, literals_in

from conftest import AB1, E, L, interp, lit

P, Q, R = Atom("p"), Atom("q"), Atom("r")


# --- atoms and literals -------------------------------------------------

@pytest.mark.parametrize("name", ["p", "ab1", "aB_2", "x9_y"])
def test_atom_names_accepted(name):
    assert Atom(name).name == name


@pytest.mark.parametrize("name", ["", "P", "1a", "a-b", "not", "true", "false", "unknown"])
def test_atom_names_rejected(name):
    with pytest.raises(ValueError):
        Atom(name)


def test_literal_complement_roundtrip():
    assert lit("p").complement() == lit("p", True)
    assert lit("p", True).complement().as_formula() == P


# --- structural queries -------------------------------------------------

def test_atoms_of_p1(p1):
    assert atoms_of(p1) == frozenset({L, E, AB1})


def test_atoms_of_empty_program():
    assert atoms_of(Program()) == frozenset()


def test_atoms_of_includes_declared():
    p = Program((Rule(Atom("a"), TOP),), frozenset({Atom("a"), Atom("b")}))
    assert atoms_of(p) == frozenset({Atom("a"), Atom("b")})


def test_head_literals_p4(p4):
    assert head_literals(p4) == frozenset(
        {lit("l"), lit("e", True), lit("ab1", True)}
    )


def test_body_literals_p1(p1):
    # the false constant in assumption bodies is not a literal
    assert body_literals(p1) == frozenset({lit("e"), lit("ab1", True)})


def test_head_literals_empty():
    assert head_literals(Program()) == frozenset()


def test_literals_under_weak_negation_are_collected():
    f = WeakNeg(And(StrongNeg(P), Q))
    assert literals_in(f) == frozenset({lit("p", True), lit("q")})


def test_atoms_in_nested():
    assert atoms_in(Or(StrongNeg(P), WeakNeg(And(Q, R)))) == frozenset({P, Q, R})


# --- classification -----------------------------------------------------

def test_formula_classes_from_worked_example():
    impl_free = Or(StrongNeg(And(StrongNeg(P), Q)), WeakNeg(R))
    basic = StrongNeg(And(StrongNeg(P), Q))
    regular = WeakNeg(And(StrongNeg(P), Q))
    for f in (impl_free, basic, regular):
        assert is_implication_free(f)
    assert not is_basic(impl_free) and not is_regular(impl_free)
    assert is_basic(basic) and not is_regular(basic)
    assert is_regular(regular) and not is_basic(regular)


def test_p1_is_wc_normal(p1):
    flags = classify(p1)
    assert flags.wc_normal
    assert flags.basic and flags.regular and flags.normal_nested


def test_p4_is_normal_nested_not_wc_normal(p4):
    flags = classify(p4)
    assert flags.normal_nested and flags.extended and flags.basic
    assert not flags.normal  # strongly negated heads
    assert not flags.wc_normal


def test_assumption_is_not_extended():
    flags = classify(Program((Rule(P, BOT),)))
    assert flags.wc_normal and not flags.extended


def test_weak_negation_body_is_extended_not_wc_normal():
    flags = classify(Program((Rule(P, And(Q, WeakNeg(R))),)))
    assert flags.extended and flags.normal
    assert not flags.basic and not flags.wc_normal


def test_formula_head_is_not_normal_nested():
    flags = classify(Program((Rule(Or(P, Q), TOP),)))
    assert not flags.normal_nested and flags.basic


def test_empty_program_has_all_flags():
    flags = classify(Program())
    assert all(
        (flags.basic, flags.regular, flags.normal_nested, flags.extended,
         flags.normal, flags.wc_normal)
    )


# --- regularization -----------------------------------------------------

def test_double_strong_negation_cancels():
    assert regularize(StrongNeg(StrongNeg(P))) == P


def test_strong_negation_of_weak_negation_cancels():
    assert regularize(StrongNeg(WeakNeg(P))) == P


def test_strong_negation_distributes_over_and():
    assert regularize(StrongNeg(And(P, Q))) == Or(StrongNeg(P), StrongNeg(Q))


def test_strong_negation_distributes_over_or():
    assert regularize(StrongNeg(Or(P, Q))) == And(StrongNeg(P), StrongNeg(Q))


def test_strong_negation_of_classical_implication():
    f = StrongNeg(Impl(ImplKind.CLASSICAL, P, Q))
    assert regularize(f) == And(StrongNeg(P), Q)


def test_strong_negation_of_constants():
    assert regularize(StrongNeg(TOP)) == BOT
    assert regularize(StrongNeg(BOT)) == TOP
    assert regularize(StrongNeg(UNK)) == UNK


def test_regularize_rejects_program_implications():
    with pytest.raises(LogicError):
        regularize(Impl(ImplKind.PROGRAM, P, Q))
    with pytest.raises(LogicError):
        regularize(StrongNeg(Impl(ImplKind.LUKASIEWICZ, P, Q)))


def test_regularize_program_handles_double_negated_assumptions():
    # the completion rule  ~~e :- ~true  regularizes to  e :- false
    p = Program((Rule(StrongNeg(StrongNeg(E)), StrongNeg(TOP)),))
    assert regularize_program(p).rules == (Rule(E, BOT),)


def test_regularize_program_negated_conjunction_body():
    p = Program((Rule(StrongNeg(L), StrongNeg(And(E, StrongNeg(AB1)))),))
    assert regularize_program(p).rules == (
        Rule(StrongNeg(L), Or(StrongNeg(E), AB1)),
    )


def test_regularize_program_identity_on_regular(p1):
    assert regularize_program(p1) == p1


# --- property tests -----------------------------------------------------

ATOMS = [Atom(n) for n in "pqr"]


def formulas(allow_weak=True, allow_impl=False):
    leaves = st.sampled_from(ATOMS + [TOP, BOT, UNK])

    def extend(inner):
        options = [
            st.builds(StrongNeg, inner),
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
        ]
        if allow_weak:
            options.append(st.builds(WeakNeg, inner))
        if allow_impl:
            options.append(
                st.builds(lambda h, b: Impl(ImplKind.CLASSICAL, h, b), inner, inner)
            )
        return st.one_of(options)

    return st.recursive(leaves, extend, max_leaves=12)


@given(formulas(allow_impl=True))
@settings(max_examples=150)
def test_regularize_is_idempotent(f):
    once = regularize(f)
    assert regularize(once) == once
    assert is_regular(once)


@given(formulas(allow_impl=True))
@settings(max_examples=100)
def test_regularize_preserves_satisfaction(f):
    # the negation rewrites are model-preserving, not value-preserving:
    # ~not p evaluates to false where p alone is unknown
    for i in all_interpretations(atoms_in(f)):
        assert (evaluate(f, i, Logic.NELSON) is TruthValue.TRUE) == (
            evaluate(regularize(f), i, Logic.NELSON) is TruthValue.TRUE
        )


@given(formulas(allow_weak=False))
@settings(max_examples=100)
def test_regularize_preserves_values_of_basic_formulas(f):
    # without weak negation only exact de Morgan steps apply, so the
    # full three-valued value survives, under either logic
    for i in all_interpretations(atoms_in(f)):
        for logic in (Logic.NELSON, Logic.LUKASIEWICZ):
            assert evaluate(f, i, logic) == evaluate(regularize(f), i, logic)


@given(formulas(allow_weak=False))
@settings(max_examples=100)
def test_basic_formulas_never_lose_truth_with_more_knowledge(f):
    # knowledge-monotonicity of {and, or, ~} formulas
    interps = all_interpretations(atoms_in(f))
    for i in interps:
        if evaluate(f, i, Logic.NELSON) is not TruthValue.TRUE:
            continue
        for j in interps:
            if (
                i.true_atoms <= j.true_atoms
                and i.false_atoms <= j.false_atoms
            ):
                assert evaluate(f, j, Logic.NELSON) is TruthValue.TRUE


def test_program_deduplicates_preserving_order():
    a_b, a_c = Rule(P, Q), Rule(P, R)
    p = Program((a_b, a_c, a_b))
    assert p.rules == (a_b, a_c)


def test_rule_rejects_implications():
    with pytest.raises(ValueError):
        Rule(P, Impl(ImplKind.PROGRAM, P, Q))
