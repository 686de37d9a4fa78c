"""Propositional logic programs with strong and weak negation.

The package evaluates programs under two three-valued semantics, the
answer set semantics and the weak completion semantics, and implements
the transformations relating them: regularization, definition merging,
weak completion, definition completion, and the Lukasiewicz-to-classical
theory embedding.
"""

from .answer_sets import (
    answer_sets,
    is_answer_set,
    is_closed,
    reduct,
    reduct_program,
)
from .checks import CheckFailure, CheckReport, PROPERTY_NAMES, run_check
from .errors import (
    CapError,
    GenerationError,
    LogicError,
    LpsemError,
    ParseError,
    ProgramClassError,
)
from .formatting import (
    format_formula,
    format_model,
    format_program,
    format_rule,
    format_theory,
    program_to_json,
    theory_to_json,
)
from .generate import PROGRAM_CLASSES, generate_program
from .parsing import SourceProgram, parse, parse_interpretation, parse_source
from .semantics import (
    DEFAULT_MAX_ATOMS,
    Interpretation,
    LeastModelResult,
    LeastModelStatus,
    Logic,
    Theory,
    all_interpretations,
    enumerate_models,
    evaluate,
    knowledge_leq,
    knowledge_lt,
    knowledge_minimal,
    least_model,
    minimal_models,
    satisfies,
    truth_leq,
)
from .syntax import (
    And,
    Atom,
    BOT,
    Const,
    Formula,
    Impl,
    ImplKind,
    Literal,
    Or,
    Program,
    ProgramClass,
    Rule,
    StrongNeg,
    TOP,
    TruthValue,
    UNK,
    WeakNeg,
    atoms_of,
    body_literals,
    classify,
    conj,
    disj,
    fact,
    head_literals,
    iff_formula,
    is_basic,
    is_implication_free,
    is_regular,
    literals_in,
    regularize,
    regularize_program,
)
from .transform import (
    as_l_theory,
    as_n_theory,
    defining_rules,
    definition_completion,
    merge_definitions,
    undefined_literals,
    vakarelov_translate,
    weak_completion,
)
from .wcs import phi_fixpoint, phi_iterates, phi_step, wc_models

__all__ = [name for name in dir() if not name.startswith("_")]
