"""Answer set semantics: reduct, closedness, recognition, enumeration.

An interpretation is an answer set of a program when it is a
knowledge-minimal interpretation closed under the reduct (with respect
to itself) of the regularized program.  ``is_answer_set`` implements
that definition literally; ``answer_sets`` sweeps all interpretations
over the program alphabet and prefilters candidates with a vectorized
model check, which is sound because evaluating a reduct under the same
interpretation it was taken with gives the value of the original
formula.
"""

from __future__ import annotations

from .semantics import (
    DEFAULT_MAX_ATOMS,
    Interpretation,
    Logic,
    TruthValue,
    Theory,
    all_interpretations,
    enumerate_models,
    evaluate,
    knowledge_minimal,
)
from .syntax import (
    And,
    Atom,
    BOT,
    Const,
    Formula,
    Or,
    Program,
    Rule,
    StrongNeg,
    TOP,
    WeakNeg,
    atoms_of,
    is_regular,
    regularize_program,
    require_regular,
    subformulas,
)
from .transform import as_n_theory
from .errors import ProgramClassError


def reduct(f: Formula, i: Interpretation) -> Formula:
    """Partially evaluate weak negation against ``i``.

    Literals and constants map to themselves, conjunction and
    disjunction recurse, and a weak negation becomes ``false`` when its
    reduced operand holds in ``i`` and ``true`` otherwise.  Only regular
    implication-free formulas are accepted.
    """
    if isinstance(f, (Const, Atom)):
        return f
    if isinstance(f, StrongNeg):
        if not isinstance(f.operand, Atom):
            raise ProgramClassError(
                "reduct requires a regular formula "
                "(strong negation only directly on atoms)"
            )
        return f
    if isinstance(f, And):
        return And(reduct(f.left, i), reduct(f.right, i))
    if isinstance(f, Or):
        return Or(reduct(f.left, i), reduct(f.right, i))
    if isinstance(f, WeakNeg):
        inner = reduct(f.operand, i)
        if evaluate(inner, i, Logic.NELSON) is TruthValue.TRUE:
            return BOT
        return TOP
    raise ProgramClassError("reduct requires an implication-free formula")


def reduct_program(p: Program, i: Interpretation) -> Program:
    """Rule-wise reduct of a regular program."""
    require_regular(p, "reduct_program")
    return Program(
        tuple(Rule(reduct(r.head, i), reduct(r.body, i)) for r in p),
        p.declared_atoms,
    )


def is_closed(i: Interpretation, p: Program) -> bool:
    """Every rule whose body holds in ``i`` has its head holding too."""
    require_regular(p, "is_closed")
    for r in p:
        if (
            evaluate(r.body, i, Logic.NELSON) is TruthValue.TRUE
            and evaluate(r.head, i, Logic.NELSON) is not TruthValue.TRUE
        ):
            return False
    return True


def _has_weak_negation(p: Program) -> bool:
    return any(
        isinstance(g, WeakNeg)
        for r in p
        for f in (r.head, r.body)
        for g in subformulas(f)
    )


def _downset(i: Interpretation) -> list[Interpretation]:
    # interpretations with strictly less knowledge than i
    known = sorted(i.true_atoms) + sorted(i.false_atoms)
    split = len(i.true_atoms)
    out = []
    for mask in range(2 ** len(known) - 1):
        true_atoms = [a for k, a in enumerate(known[:split]) if mask >> k & 1]
        false_atoms = [
            a for k, a in enumerate(known[split:]) if mask >> (k + split) & 1
        ]
        out.append(Interpretation(frozenset(true_atoms), frozenset(false_atoms)))
    return out


def _is_answer_set_of_regular(i: Interpretation, rp: Program) -> bool:
    fixed = reduct_program(rp, i)
    if not is_closed(i, fixed):
        return False
    return not any(is_closed(j, fixed) for j in _downset(i))


def is_answer_set(i: Interpretation, p: Program) -> bool:
    """Knowledge-minimal closed interpretation under the program's own reduct.

    The program is regularized internally; minimality is searched over
    the knowledge-order downset of ``i``.
    """
    return _is_answer_set_of_regular(i, regularize_program(p))


def answer_sets(p: Program, max_atoms: int = DEFAULT_MAX_ATOMS) -> list[Interpretation]:
    """All answer sets over the program alphabet, in sweep order."""
    rp = regularize_program(p)
    alphabet = atoms_of(rp)
    # a reduct evaluated under the interpretation it was taken with gives
    # the original value, so closed candidates are exactly the models of
    # the retagged regular program
    candidates = enumerate_models(as_n_theory(rp), alphabet, max_atoms)
    if not _has_weak_negation(rp):
        # the reduct is the identity here, so one closedness relation
        # covers every candidate and minimality is plain dominance
        return knowledge_minimal(candidates)
    out = []
    for i in candidates:
        fixed = reduct_program(rp, i)
        if not any(is_closed(j, fixed) for j in _downset(i)):
            out.append(i)
    return out
