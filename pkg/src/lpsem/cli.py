"""Command-line interface.

Subcommands: ``wcs``, ``asp``, ``transform``, ``eval``, ``check``,
``fuzz``.  Exit codes: 0 success (and, for check/fuzz, zero failures),
1 check failures, 2 usage or parse errors, 3 enumeration cap exceeded.
Identical command lines produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .answer_sets import answer_sets
from .checks import PROPERTY_NAMES, run_check
from .errors import CapError, LpsemError, ParseError
from .formatting import (
    format_formula,
    format_model,
    format_result,
    model_to_json,
    program_to_json,
    theory_to_json,
    unknown_atoms,
)
from .generate import PROGRAM_CLASSES
from .parsing import SourceProgram, parse_interpretation, parse_source
from .semantics import DEFAULT_MAX_ATOMS, Logic, TruthValue, evaluate
from .syntax import (
    Program,
    WeakNeg,
    atoms_of,
    classify,
    regularize_program,
    subformulas,
)
from .transform import (
    as_l_theory,
    as_n_theory,
    definition_completion,
    merge_definitions,
    vakarelov_translate,
    weak_completion,
)
from .wcs import phi_iterates, wc_models


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--max-atoms", type=int, default=DEFAULT_MAX_ATOMS, metavar="N",
        help=f"enumeration cap on alphabet size (default: {DEFAULT_MAX_ATOMS})",
    )
    return common


def _build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    top = argparse.ArgumentParser(
        prog="lpsem",
        description="logic program semantics: weak completion and answer sets",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_wcs = sub.add_parser("wcs", parents=[common], help="wc-models of a program")
    p_wcs.add_argument("file")
    p_wcs.add_argument(
        "--trace-phi", action="store_true",
        help="print the consequence-operator iterates (wc-normal programs)",
    )

    p_asp = sub.add_parser("asp", parents=[common], help="answer sets of a program")
    p_asp.add_argument("file")

    p_tr = sub.add_parser("transform", parents=[common], help="rewrite a program")
    p_tr.add_argument("file")
    p_tr.add_argument(
        "--to", required=True,
        choices=("wc", "dc", "pdisj", "regular", "vakarelov"),
    )

    p_eval = sub.add_parser(
        "eval", parents=[common], help="evaluate a program as a theory"
    )
    p_eval.add_argument("file")
    p_eval.add_argument("--logic", required=True, choices=("L", "N"))
    p_eval.add_argument(
        "--interp", required=True, metavar="LITERALS",
        help="interpretation as a literal set, e.g. '{a, -b}'",
    )

    p_check = sub.add_parser(
        "check", parents=[common], help="run a named property check"
    )
    p_check.add_argument("--property", required=True, choices=PROPERTY_NAMES)
    p_check.add_argument("--instances", type=int, default=100, metavar="N")
    p_check.add_argument("--seed", type=int, default=0, metavar="S")

    p_fuzz = sub.add_parser(
        "fuzz", parents=[common],
        help="run a property on generated programs of a chosen shape",
    )
    p_fuzz.add_argument("--property", required=True, choices=PROPERTY_NAMES)
    p_fuzz.add_argument("--class", dest="program_class", choices=PROGRAM_CLASSES)
    p_fuzz.add_argument("--atoms", type=int, metavar="K")
    p_fuzz.add_argument("--rules", type=int, metavar="R")
    p_fuzz.add_argument("--instances", type=int, default=100, metavar="N")
    p_fuzz.add_argument("--seed", type=int, default=0, metavar="S")

    return top


def _load(path: str) -> SourceProgram:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise LpsemError(f"cannot read {path}: {e.strerror}") from e
    return parse_source(text, path)


def _reject_weak_negation(source: SourceProgram) -> None:
    for rule in source.program:
        for f in (rule.head, rule.body):
            if any(isinstance(g, WeakNeg) for g in subformulas(f)):
                where = source.sources.get(rule)
                at = ""
                if where is not None and where.weak_neg_line is not None:
                    at = f" at {where.weak_neg_line}:{where.weak_neg_column}"
                text = where.text if where is not None else format_result(
                    Program((rule,))
                )
                raise LpsemError(
                    f"weak negation ('not') is not allowed under the weak "
                    f"completion semantics{at}: {text}  "
                    f"(use '-' strong negation)"
                )


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _cmd_wcs(args) -> int:
    source = _load(args.file)
    _reject_weak_negation(source)
    program = source.program
    trace = None
    if args.trace_phi:
        if not classify(program).wc_normal:
            raise LpsemError(
                "--trace-phi requires a wc-normal program "
                "(atom heads, basic conjunctive bodies, assumptions)"
            )
        trace = phi_iterates(program)
    models = wc_models(program, args.max_atoms)
    alphabet = atoms_of(program)
    if args.format == "json":
        payload = {
            "wc_models": [model_to_json(m) for m in models],
            "unknown": [unknown_atoms(m, alphabet) for m in models],
        }
        if trace is not None:
            payload["phi_trace"] = [model_to_json(i) for i in trace]
        _emit_json(payload)
        return 0
    lines = []
    if trace is not None:
        lines += [f"phi {k}: {format_model(i)}" for k, i in enumerate(trace)]
    if models:
        lines += [format_model(m) for m in models]
    else:
        lines.append("no wc-models")
    _emit("\n".join(lines))
    return 0


def _cmd_asp(args) -> int:
    program = _load(args.file).program
    models = answer_sets(program, args.max_atoms)
    alphabet = atoms_of(program)
    if args.format == "json":
        _emit_json(
            {
                "answer_sets": [model_to_json(m) for m in models],
                "unknown": [unknown_atoms(m, alphabet) for m in models],
            }
        )
        return 0
    _emit("\n".join(format_model(m) for m in models) if models else "no answer sets")
    return 0


_TRANSFORMS = {
    "wc": weak_completion,
    "dc": definition_completion,
    "pdisj": merge_definitions,
    "regular": regularize_program,
}


def _cmd_transform(args) -> int:
    program = _load(args.file).program
    if args.to == "vakarelov":
        result = vakarelov_translate(as_l_theory(program))
        _emit_json(theory_to_json(result)) if args.format == "json" else _emit(
            format_result(result)
        )
        return 0
    result = _TRANSFORMS[args.to](program)
    if args.format == "json":
        _emit_json(program_to_json(result))
    else:
        _emit(format_result(result))
    return 0


def _cmd_eval(args) -> int:
    program = _load(args.file).program
    interp = parse_interpretation(args.interp)
    logic = Logic.LUKASIEWICZ if args.logic == "L" else Logic.NELSON
    theory = as_l_theory(program) if logic is Logic.LUKASIEWICZ else as_n_theory(program)
    rows = sorted(
        (format_formula(f), str(evaluate(f, interp, logic)))
        for f in theory.formulas
    )
    satisfied = all(v == str(TruthValue.TRUE) for _, v in rows)
    if args.format == "json":
        _emit_json(
            {
                "satisfies": satisfied,
                "values": [{"formula": f, "value": v} for f, v in rows],
            }
        )
        return 0
    lines = [f"satisfies: {'true' if satisfied else 'false'}"]
    lines += [f"{v}\t{f}" for f, v in rows]
    _emit("\n".join(lines))
    return 0


def _cmd_check(args, program_class: Optional[str] = None) -> int:
    report = run_check(
        args.property,
        args.instances,
        args.seed,
        atoms=getattr(args, "atoms", None),
        rules=getattr(args, "rules", None),
        program_class=program_class,
        max_atoms=args.max_atoms,
    )
    if args.format == "json":
        _emit_json(report.to_json())
    else:
        _emit(report.to_text())
    return 0 if report.passed else 1


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        if args.command == "wcs":
            return _cmd_wcs(args)
        if args.command == "asp":
            return _cmd_asp(args)
        if args.command == "transform":
            return _cmd_transform(args)
        if args.command == "eval":
            return _cmd_eval(args)
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "fuzz":
            return _cmd_check(args, program_class=args.program_class)
    except CapError as e:
        sys.stderr.write(f"error: {e}\n")
        return 3
    except (LpsemError, ValueError) as e:
        prefix = "parse error" if isinstance(e, ParseError) else "error"
        sys.stderr.write(f"{prefix}: {e}\n")
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
