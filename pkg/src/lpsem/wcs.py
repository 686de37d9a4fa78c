"""Weak completion semantics and its consequence operator.

A wc-model of a normal nested program is a knowledge-minimal model of
the Lukasiewicz reading of the program's weak completion.  For
wc-normal programs (atom heads, basic conjunctive bodies, plus
assumptions ``a :- false.``) the unique wc-model is also the least
fixpoint, from the empty interpretation, of the one-step consequence
operator: an atom becomes true when some defining body is true and
false when it has defining rules and all their bodies are false.
"""

from __future__ import annotations

from .errors import LogicError, ProgramClassError
from .semantics import (
    DEFAULT_MAX_ATOMS,
    Interpretation,
    Logic,
    TruthValue,
    evaluate,
    minimal_models,
)
from .syntax import (
    Atom,
    Program,
    WeakNeg,
    atoms_of,
    classify,
    require_normal_nested,
    subformulas,
)
from .transform import as_l_theory, weak_completion


def wc_models(p: Program, max_atoms: int = DEFAULT_MAX_ATOMS) -> list[Interpretation]:
    """Knowledge-minimal models of the Lukasiewicz weak completion."""
    require_normal_nested(p, "wc_models")
    for r in p:
        for f in (r.head, r.body):
            if any(isinstance(g, WeakNeg) for g in subformulas(f)):
                raise LogicError(
                    "weak negation has no weak-completion reading; "
                    "use strong negation"
                )
    return minimal_models(as_l_theory(weak_completion(p)), atoms_of(p), max_atoms)


def _require_wc_normal(p: Program, operation: str) -> None:
    if not classify(p).wc_normal:
        raise ProgramClassError(
            f"{operation} requires a wc-normal program (atom heads with "
            "basic conjunctive bodies, or assumptions with body false)"
        )


def phi_step(p: Program, i: Interpretation) -> Interpretation:
    """One application of the consequence operator to ``i``."""
    _require_wc_normal(p, "phi_step")
    bodies: dict[Atom, list[TruthValue]] = {}
    for r in p:
        assert isinstance(r.head, Atom)
        bodies.setdefault(r.head, []).append(
            evaluate(r.body, i, Logic.LUKASIEWICZ)
        )
    true_atoms = {
        a for a, vals in bodies.items() if any(v is TruthValue.TRUE for v in vals)
    }
    false_atoms = {
        a for a, vals in bodies.items() if all(v is TruthValue.FALSE for v in vals)
    }
    return Interpretation(frozenset(true_atoms), frozenset(false_atoms))


def phi_iterates(p: Program) -> list[Interpretation]:
    """Iterates from the empty interpretation up to the fixpoint.

    The chain starts at the empty interpretation and ends at the first
    repeated value; for a wc-normal program at most one productive step
    per atom is possible, so a longer chain signals a bug.
    """
    _require_wc_normal(p, "phi_iterates")
    bound = len(atoms_of(p)) + 1
    chain = [Interpretation.empty()]
    for _ in range(bound + 1):
        nxt = phi_step(p, chain[-1])
        if nxt == chain[-1]:
            return chain
        chain.append(nxt)
    raise RuntimeError(
        "consequence operator did not reach a fixpoint within its bound"
    )


def phi_fixpoint(p: Program) -> Interpretation:
    """Least fixpoint of the consequence operator from empty."""
    return phi_iterates(p)[-1]
