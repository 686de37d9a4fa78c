"""Three-valued interpretations, evaluation, and exhaustive model search.

Two logics share the connective tables:

* Lukasiewicz mode evaluates ``{~, and, or, <-l}``; weak negation and
  classical implication are not admissible.
* The strong-negation extension of classical logic evaluates
  ``{~, not, and, or, <-cl}``; Lukasiewicz implication is not admissible.

Encoding truth values as FALSE=0, UNKNOWN=1, TRUE=2 makes the tables
arithmetic: conjunction is min, disjunction is max, strong negation is
``2 - v``, weak negation maps everything but TRUE to TRUE, classical
implication ``h <- b`` is ``h`` when ``b`` is TRUE and TRUE otherwise,
and Lukasiewicz implication is ``min(2, 2 - b + h)``.

Model search is an exhaustive sweep over all ``3**n`` interpretations of
an alphabet, vectorized with numpy; interpretation ``j`` reads the
base-3 digits of ``j`` as the values of the sorted atoms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import CapError, LogicError
from .syntax import (
    And,
    Atom,
    Const,
    Formula,
    Impl,
    ImplKind,
    Literal,
    Or,
    StrongNeg,
    TruthValue,
    WeakNeg,
    subformulas,
)

DEFAULT_MAX_ATOMS = 12


class Logic(Enum):
    """Evaluation mode for formulas and theories."""

    LUKASIEWICZ = "L"
    NELSON = "N"  # classical logic extended with strong negation


@dataclass(frozen=True)
class Interpretation:
    """Pair of disjoint atom sets: atoms true, atoms false, rest unknown."""

    true_atoms: frozenset[Atom] = field(default_factory=frozenset)
    false_atoms: frozenset[Atom] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "true_atoms", frozenset(self.true_atoms))
        object.__setattr__(self, "false_atoms", frozenset(self.false_atoms))
        overlap = self.true_atoms & self.false_atoms
        if overlap:
            names = ", ".join(sorted(a.name for a in overlap))
            raise ValueError(f"atoms both true and false: {names}")

    def value(self, atom: Atom) -> TruthValue:
        if atom in self.true_atoms:
            return TruthValue.TRUE
        if atom in self.false_atoms:
            return TruthValue.FALSE
        return TruthValue.UNKNOWN

    def literals(self) -> frozenset[Literal]:
        return frozenset(
            {Literal(a) for a in self.true_atoms}
            | {Literal(a, negated=True) for a in self.false_atoms}
        )

    @classmethod
    def from_literals(cls, literals: Iterable[Literal]) -> "Interpretation":
        lits = set(literals)
        return cls(
            frozenset(l.atom for l in lits if not l.negated),
            frozenset(l.atom for l in lits if l.negated),
        )

    @classmethod
    def empty(cls) -> "Interpretation":
        return cls(frozenset(), frozenset())

    def __str__(self) -> str:
        return "{" + ", ".join(str(l) for l in sorted(self.literals())) + "}"


def knowledge_leq(i: Interpretation, j: Interpretation) -> bool:
    """``i`` contains at most the knowledge of ``j`` (componentwise subset)."""
    return i.true_atoms <= j.true_atoms and i.false_atoms <= j.false_atoms


def knowledge_lt(i: Interpretation, j: Interpretation) -> bool:
    return knowledge_leq(i, j) and i != j


def truth_leq(i: Interpretation, j: Interpretation) -> bool:
    """``i`` contains at most the truth of ``j`` (false <= unknown <= true)."""
    return i.true_atoms <= j.true_atoms and j.false_atoms <= i.false_atoms


def _check_admissible(f: Formula, logic: Logic) -> None:
    if isinstance(f, WeakNeg) and logic is Logic.LUKASIEWICZ:
        raise LogicError("weak negation is not admissible in Lukasiewicz mode")
    if isinstance(f, Impl):
        if f.kind is ImplKind.PROGRAM:
            raise LogicError(
                "program implications carry no semantics; retag the program first"
            )
        if f.kind is ImplKind.CLASSICAL and logic is Logic.LUKASIEWICZ:
            raise LogicError(
                "classical implication is not admissible in Lukasiewicz mode"
            )
        if f.kind is ImplKind.LUKASIEWICZ and logic is Logic.NELSON:
            raise LogicError(
                "Lukasiewicz implication is not admissible in classical mode"
            )


def evaluate(f: Formula, i: Interpretation, logic: Logic) -> TruthValue:
    """Bottom-up truth-table evaluation of ``f`` under ``i``."""
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Atom):
        return i.value(f)
    if isinstance(f, StrongNeg):
        return TruthValue(2 - evaluate(f.operand, i, logic))
    if isinstance(f, WeakNeg):
        _check_admissible(f, logic)
        v = evaluate(f.operand, i, logic)
        return TruthValue.FALSE if v is TruthValue.TRUE else TruthValue.TRUE
    if isinstance(f, And):
        return min(evaluate(f.left, i, logic), evaluate(f.right, i, logic))
    if isinstance(f, Or):
        return max(evaluate(f.left, i, logic), evaluate(f.right, i, logic))
    if isinstance(f, Impl):
        _check_admissible(f, logic)
        h = evaluate(f.head, i, logic)
        b = evaluate(f.body, i, logic)
        if f.kind is ImplKind.CLASSICAL:
            return h if b is TruthValue.TRUE else TruthValue.TRUE
        return TruthValue(min(2, 2 - b + h))
    raise TypeError(f"not a formula: {f!r}")


@dataclass(frozen=True)
class Theory:
    """Set of formulas evaluated under a fixed logic."""

    formulas: frozenset[Formula]
    logic: Logic

    def __post_init__(self):
        object.__setattr__(self, "formulas", frozenset(self.formulas))
        for f in self.formulas:
            for g in subformulas(f):
                _check_admissible(g, self.logic)

    def __len__(self) -> int:
        return len(self.formulas)


def satisfies(i: Interpretation, t: Theory) -> bool:
    """True iff ``i`` evaluates every formula of ``t`` as true."""
    return all(evaluate(f, i, t.logic) is TruthValue.TRUE for f in t.formulas)


# --- exhaustive sweeps -------------------------------------------------

_TRUE = np.int8(TruthValue.TRUE)


def _sorted_alphabet(alphabet: Iterable[Atom], max_atoms: int) -> list[Atom]:
    atoms = sorted(set(alphabet))
    if len(atoms) > max_atoms:
        raise CapError(required=len(atoms), cap=max_atoms)
    return atoms


def _value_grid(atoms: Sequence[Atom]) -> dict[Atom, np.ndarray]:
    # column k of the base-3 expansion of the sweep index is atoms[k]
    n = len(atoms)
    idx = np.arange(3**n, dtype=np.int64)
    return {
        a: ((idx // 3 ** (n - 1 - k)) % 3).astype(np.int8)
        for k, a in enumerate(atoms)
    }


def _formula_values(
    f: Formula, grid: dict[Atom, np.ndarray], logic: Logic, size: int
) -> np.ndarray:
    if isinstance(f, Const):
        return np.full(size, np.int8(f.value), dtype=np.int8)
    if isinstance(f, Atom):
        v = grid.get(f)
        if v is None:  # atom outside the alphabet: unknown everywhere
            return np.full(size, np.int8(TruthValue.UNKNOWN), dtype=np.int8)
        return v
    if isinstance(f, StrongNeg):
        return np.int8(2) - _formula_values(f.operand, grid, logic, size)
    if isinstance(f, WeakNeg):
        _check_admissible(f, logic)
        v = _formula_values(f.operand, grid, logic, size)
        return np.where(v == _TRUE, np.int8(0), np.int8(2))
    if isinstance(f, And):
        return np.minimum(
            _formula_values(f.left, grid, logic, size),
            _formula_values(f.right, grid, logic, size),
        )
    if isinstance(f, Or):
        return np.maximum(
            _formula_values(f.left, grid, logic, size),
            _formula_values(f.right, grid, logic, size),
        )
    if isinstance(f, Impl):
        _check_admissible(f, logic)
        h = _formula_values(f.head, grid, logic, size)
        b = _formula_values(f.body, grid, logic, size)
        if f.kind is ImplKind.CLASSICAL:
            return np.where(b == _TRUE, h, _TRUE)
        return np.minimum(_TRUE, np.int8(2) - b + h)
    raise TypeError(f"not a formula: {f!r}")


def _interpretation_at(index: int, atoms: Sequence[Atom]) -> Interpretation:
    n = len(atoms)
    true_atoms, false_atoms = [], []
    for k, a in enumerate(atoms):
        digit = (index // 3 ** (n - 1 - k)) % 3
        if digit == TruthValue.TRUE:
            true_atoms.append(a)
        elif digit == TruthValue.FALSE:
            false_atoms.append(a)
    return Interpretation(frozenset(true_atoms), frozenset(false_atoms))


def all_interpretations(
    alphabet: Iterable[Atom], max_atoms: int = DEFAULT_MAX_ATOMS
) -> list[Interpretation]:
    """Every interpretation over ``alphabet`` in sweep order."""
    atoms = _sorted_alphabet(alphabet, max_atoms)
    return [_interpretation_at(j, atoms) for j in range(3 ** len(atoms))]


def enumerate_models(
    t: Theory, alphabet: Iterable[Atom], max_atoms: int = DEFAULT_MAX_ATOMS
) -> list[Interpretation]:
    """All models of ``t`` over ``alphabet``, in deterministic sweep order."""
    atoms = _sorted_alphabet(alphabet, max_atoms)
    size = 3 ** len(atoms)
    grid = _value_grid(atoms)
    ok = np.ones(size, dtype=bool)
    for f in t.formulas:
        ok &= _formula_values(f, grid, t.logic, size) == _TRUE
        if not ok.any():
            return []
    return [_interpretation_at(int(j), atoms) for j in np.flatnonzero(ok)]


def knowledge_minimal(models: Iterable[Interpretation]) -> list[Interpretation]:
    """Knowledge-order minimal elements, in the order they were given."""
    given = list(models)
    # scanning by ascending knowledge size keeps the front complete:
    # any strictly smaller model is already represented by a front member
    minimal: list[Interpretation] = []
    for m in sorted(given, key=lambda m: len(m.true_atoms) + len(m.false_atoms)):
        if not any(knowledge_leq(prev, m) for prev in minimal):
            minimal.append(m)
    keep = set(minimal)
    return [m for m in given if m in keep]


def minimal_models(
    t: Theory, alphabet: Iterable[Atom], max_atoms: int = DEFAULT_MAX_ATOMS
) -> list[Interpretation]:
    """Knowledge-minimal models of ``t`` over ``alphabet``."""
    return knowledge_minimal(enumerate_models(t, alphabet, max_atoms))


class LeastModelStatus(Enum):
    FOUND = "found"
    NO_MODEL = "no-model"
    NOT_UNIQUE = "not-unique"


@dataclass(frozen=True)
class LeastModelResult:
    model: Optional[Interpretation]
    status: LeastModelStatus


def least_model(
    t: Theory, alphabet: Iterable[Atom], max_atoms: int = DEFAULT_MAX_ATOMS
) -> LeastModelResult:
    """The unique minimal model, or the reason there is none."""
    minimal = minimal_models(t, alphabet, max_atoms)
    if not minimal:
        return LeastModelResult(None, LeastModelStatus.NO_MODEL)
    if len(minimal) > 1:
        return LeastModelResult(None, LeastModelStatus.NOT_UNIQUE)
    return LeastModelResult(minimal[0], LeastModelStatus.FOUND)
