"""Runnable checks for the semantic correspondences.

Each named property draws seeded random instances, verifies one
equivalence or implication on all of them, and reports every
counterexample found.  Property names:

* ``prop1-closed-nmodel``      closedness coincides with being a model
                               of the classically retagged program;
* ``prop2-as-implies-nmodel``  answer sets are such models, and the
                               fixed converse probe must keep failing;
* ``prop3-basic-dichotomy``    weak-negation-free literal-headed
                               programs either have a unique answer set
                               equal to the least model, or neither;
* ``prop4-wc-answersets``      weak completion preserves answer sets;
* ``lemma1-completion``        fresh definitions may be strengthened to
                               biconditionals without changing answer
                               sets;
* ``lemma2-model-equality``    the classical reading of the completed
                               definition completion has the models of
                               the Lukasiewicz weak completion;
* ``theorem1-vakarelov``       the Lukasiewicz-to-classical embedding
                               preserves models;
* ``theorem2-correspondence``  wc-models coincide with the answer sets
                               of the definition completion;
* ``phi-equals-wcmodel``       the consequence-operator fixpoint is the
                               unique wc-model and its chain is
                               monotone and short.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .answer_sets import answer_sets, is_answer_set, is_closed
from .errors import GenerationError
from .formatting import format_formula, format_program
from .generate import (
    atom_pool,
    generate_program,
    random_basic_normal_nested,
    random_implication_free,
    random_l_formula,
    random_single_polarity_program,
)
from .semantics import (
    DEFAULT_MAX_ATOMS,
    Interpretation,
    Logic,
    Theory,
    all_interpretations,
    enumerate_models,
    knowledge_leq,
    least_model,
    LeastModelStatus,
    satisfies,
)
from .syntax import (
    Atom,
    Literal,
    Program,
    Rule,
    atoms_of,
    head_literals,
    regularize_program,
)
from .transform import (
    as_l_theory,
    as_n_theory,
    definition_completion,
    vakarelov_translate,
    weak_completion,
)
from .wcs import phi_iterates, wc_models
from .parsing import parse


@dataclass(frozen=True)
class CheckFailure:
    program: str
    witness: str
    expected: str
    actual: str


@dataclass
class CheckReport:
    property_name: str
    instances: int
    failures: list[CheckFailure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "property": self.property_name,
            "instances": self.instances,
            "failures": [
                {
                    "program": f.program,
                    "witness": f.witness,
                    "expected": f.expected,
                    "actual": f.actual,
                }
                for f in self.failures
            ],
            "notes": self.notes,
            "passed": self.passed,
        }

    def to_text(self) -> str:
        lines = [
            f"property: {self.property_name}",
            f"instances: {self.instances}",
            f"failures: {len(self.failures)}",
        ]
        for k, f in enumerate(self.failures, 1):
            lines += [
                f"failure {k}:",
                f"  program: {f.program}",
                f"  witness: {f.witness}",
                f"  expected: {f.expected}",
                f"  actual: {f.actual}",
            ]
        for note in self.notes:
            lines.append(f"note: {note}")
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)


@dataclass(frozen=True)
class CheckProfile:
    """Instance-generation defaults for one property."""

    atoms: int
    rules: int
    program_class: Optional[str]  # None: not driven by generate_program


def _model_set_text(models: list[Interpretation]) -> str:
    return "[" + ", ".join(str(m) for m in models) + "]"


class _Run:
    """One seeded check run: generation parameters plus failure sink."""

    def __init__(
        self,
        seed: int,
        profile: CheckProfile,
        atoms: Optional[int],
        rules: Optional[int],
        program_class: Optional[str],
        max_atoms: int,
    ):
        self.rng = random.Random(seed)
        self.atoms = atoms if atoms is not None else profile.atoms
        self.rules = rules if rules is not None else profile.rules
        self.program_class = (
            program_class if program_class is not None else profile.program_class
        )
        self.max_atoms = max_atoms
        self.failures: list[CheckFailure] = []
        self.notes: list[str] = []

    def next_program(self) -> Program:
        count = self.rng.randint(1, max(1, self.rules))
        return generate_program(
            self.atoms, count, self.program_class, seed=0, rng=self.rng
        )

    def fail(self, program: str, witness: str, expected: str, actual: str):
        self.failures.append(CheckFailure(program, witness, expected, actual))


def _check_prop1(run: _Run, instances: int) -> None:
    for _ in range(instances):
        p = run.next_program()
        theory = as_n_theory(p)
        for i in all_interpretations(atoms_of(p), run.max_atoms):
            closed = is_closed(i, p)
            model = satisfies(i, theory)
            if closed != model:
                run.fail(
                    format_program(p),
                    str(i),
                    f"closed == model, model={model}",
                    f"closed={closed}",
                )


def _check_prop2(run: _Run, instances: int) -> None:
    for _ in range(instances):
        p = run.next_program()
        theory = as_n_theory(p)
        for i in answer_sets(p, run.max_atoms):
            if not satisfies(i, theory):
                run.fail(
                    format_program(p),
                    str(i),
                    "every answer set is a model of the retagged program",
                    "answer set is not a model",
                )
    probe = parse("-p :- q.")
    witness = Interpretation(
        frozenset({Atom("p")}), frozenset({Atom("q")})
    )
    is_model = satisfies(witness, as_n_theory(probe))
    is_as = is_answer_set(witness, probe)
    if not is_model or is_as:
        run.fail(
            format_program(probe),
            str(witness),
            "a model of the retagged program but not an answer set",
            f"model={is_model}, answer_set={is_as}",
        )
    else:
        run.notes.append(
            f"converse probe: {witness} is a model of "
            f"{{-p :- q.}} retagged classically but not an answer set"
        )


def _check_prop3(run: _Run, instances: int) -> None:
    pool = atom_pool(run.atoms)
    for _ in range(instances):
        p = random_basic_normal_nested(
            run.rng, pool, run.rng.randint(1, run.rules)
        )
        _check_dichotomy_on(run, p)


def _check_dichotomy_on(run: _Run, p: Program) -> None:
    found = answer_sets(p, run.max_atoms)
    lm = least_model(as_n_theory(p), atoms_of(p), run.max_atoms)
    unique_branch = (
        len(found) == 1
        and lm.status is LeastModelStatus.FOUND
        and found[0] == lm.model
    )
    empty_branch = not found and lm.status is LeastModelStatus.NO_MODEL
    if unique_branch == empty_branch:
        run.fail(
            format_program(p),
            "(dichotomy)",
            "unique answer set equal to the least model, "
            "or no answer set and no model",
            f"answer_sets={_model_set_text(found)}, least={lm.status.value}",
        )


def _check_prop4(run: _Run, instances: int) -> None:
    for _ in range(instances):
        p = run.next_program()
        left = answer_sets(p, run.max_atoms)
        right = answer_sets(weak_completion(p), run.max_atoms)
        if left != right:
            run.fail(
                format_program(p),
                "(answer sets of the weak completion)",
                _model_set_text(left),
                _model_set_text(right),
            )


def _check_lemma1(run: _Run, instances: int) -> None:
    pool = atom_pool(run.atoms)
    for _ in range(instances):
        p = run.next_program()
        free = [
            Literal(a, neg)
            for a in pool
            for neg in (False, True)
            if Literal(a, neg) not in head_literals(p)
        ]
        if not free:
            continue
        chosen = run.rng.sample(free, k=min(len(free), run.rng.randint(1, 2)))
        additions = [
            Rule(l.as_formula(), random_implication_free(run.rng, pool, 2))
            for l in chosen
        ]
        directed = Program(p.rules + tuple(additions))
        paired = list(p.rules)
        for r in additions:
            paired += [r, r.reversed()]
        biconditional = Program(tuple(paired))
        left = answer_sets(directed, run.max_atoms)
        right = answer_sets(biconditional, run.max_atoms)
        if left != right:
            run.fail(
                format_program(directed),
                f"strengthened: {format_program(biconditional)!r}",
                _model_set_text(left),
                _model_set_text(right),
            )


def _check_lemma2(run: _Run, instances: int) -> None:
    # atoms defined in both polarities fall outside the correspondence;
    # see the single-polarity generator
    pool = atom_pool(run.atoms)
    for _ in range(instances):
        p = random_single_polarity_program(
            run.rng, pool, run.rng.randint(1, run.rules)
        )
        completed = weak_completion(
            regularize_program(definition_completion(p))
        )
        alphabet = atoms_of(p)
        left = enumerate_models(as_n_theory(completed), alphabet, run.max_atoms)
        right = enumerate_models(as_l_theory(weak_completion(p)), alphabet, run.max_atoms)
        if left != right:
            run.fail(
                format_program(p),
                "(model sets)",
                _model_set_text(right),
                _model_set_text(left),
            )


def _check_theorem1(run: _Run, instances: int) -> None:
    pool = atom_pool(run.atoms)
    for _ in range(instances):
        f = random_l_formula(run.rng, pool, depth=5)
        theory = Theory(frozenset({f}), Logic.LUKASIEWICZ)
        translated = vakarelov_translate(theory)
        left = enumerate_models(theory, pool, run.max_atoms)
        right = enumerate_models(translated, pool, run.max_atoms)
        if left != right:
            diff = set(left) ^ set(right)
            witness = str(sorted(diff, key=str)[0]) if diff else "(order)"
            run.fail(
                format_formula(f) + ".",
                witness,
                "same models before and after the embedding",
                f"models differ on {len(diff)} interpretations",
            )


def _check_theorem2(run: _Run, instances: int) -> None:
    for _ in range(instances):
        p = run.next_program()
        wcm = wc_models(p, run.max_atoms)
        asp = answer_sets(definition_completion(p), run.max_atoms)
        if wcm != asp or len(wcm) != 1:
            run.fail(
                format_program(p),
                "(wc-models vs answer sets of the definition completion)",
                _model_set_text(wcm),
                _model_set_text(asp),
            )


def _check_phi(run: _Run, instances: int) -> None:
    for _ in range(instances):
        p = run.next_program()
        wcm = wc_models(p, run.max_atoms)
        chain = phi_iterates(p)
        if wcm != [chain[-1]]:
            run.fail(
                format_program(p),
                str(chain[-1]),
                f"fixpoint equals the unique wc-model {_model_set_text(wcm)}",
                "fixpoint differs",
            )
            continue
        if len(chain) > len(atoms_of(p)) + 1:
            run.fail(
                format_program(p),
                f"chain length {len(chain)}",
                f"at most {len(atoms_of(p)) + 1} iterates",
                "chain too long",
            )
        for a, b in zip(chain, chain[1:]):
            if not knowledge_leq(a, b):
                run.fail(
                    format_program(p),
                    f"{a} then {b}",
                    "each iterate below its successor in the knowledge order",
                    "chain not monotone",
                )


_Checker = Callable[[_Run, int], None]

_PROPERTIES: dict[str, tuple[CheckProfile, _Checker]] = {
    "prop1-closed-nmodel": (CheckProfile(3, 4, "regular"), _check_prop1),
    "prop2-as-implies-nmodel": (CheckProfile(3, 4, "regular"), _check_prop2),
    "prop3-basic-dichotomy": (CheckProfile(4, 5, None), _check_prop3),
    "prop4-wc-answersets": (CheckProfile(4, 5, "normal_nested"), _check_prop4),
    "lemma1-completion": (CheckProfile(4, 4, "normal_nested"), _check_lemma1),
    "lemma2-model-equality": (CheckProfile(4, 4, None), _check_lemma2),
    "theorem1-vakarelov": (CheckProfile(4, 0, None), _check_theorem1),
    "theorem2-correspondence": (CheckProfile(6, 10, "wc_normal"), _check_theorem2),
    "phi-equals-wcmodel": (CheckProfile(8, 12, "wc_normal"), _check_phi),
}

PROPERTY_NAMES = tuple(_PROPERTIES)

_GENERATED_CLASS_LOCKED = {
    "prop3-basic-dichotomy",
    "lemma2-model-equality",
    "theorem1-vakarelov",
    "theorem2-correspondence",
    "phi-equals-wcmodel",
}


def run_check(
    property_name: str,
    instances: int,
    seed: int,
    atoms: Optional[int] = None,
    rules: Optional[int] = None,
    program_class: Optional[str] = None,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> CheckReport:
    """Run one named property on seeded instances and report failures."""
    if property_name not in _PROPERTIES:
        known = ", ".join(PROPERTY_NAMES)
        raise ValueError(f"unknown property {property_name!r}; known: {known}")
    if instances < 0:
        raise ValueError("instance count must be nonnegative")
    profile, checker = _PROPERTIES[property_name]
    if program_class is not None and property_name in _GENERATED_CLASS_LOCKED:
        raise GenerationError(
            f"{property_name} generates its own instance class; "
            "--class cannot override it"
        )
    run = _Run(seed, profile, atoms, rules, program_class, max_atoms)
    if instances:
        checker(run, instances)
    return CheckReport(property_name, instances, run.failures, run.notes)
