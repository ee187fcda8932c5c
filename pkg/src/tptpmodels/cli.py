"""Command-line front end.

One binary with subcommands; artifacts go to stdout (or -o FILE),
diagnostics go to stderr, and exit codes are a pure function of the
outcome: 0 success or confirmed, 1 check failed, 2 usage or parse error,
3 gave up.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import AssemblyError, EmissionError, TptpError
from .evaluate import (
    Environment, Evaluator, SZS_COUNTERSATISFIABLE, SZS_ERROR, SZS_GAVEUP,
    SZS_SATISFIABLE,
)
from .graphs import render, to_dot
from .interp import assemble, regrain, upgrade_legacy
from .interp.model import KripkeInterpretation, element_key
from .interp.regrain import LEVELS
from .syntax import parse_file, parse_formula, print_units
from .verify import check_model, check_structure, emit_for, szs_report, SZS_VALUES

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_GAVE_UP = 3


def _read(path: str):
    try:
        return Path(path).read_text()
    except OSError as e:
        print(f"cannot read {path}: {e.strerror}", file=sys.stderr)
        return None


def _parse(path: str):
    """(units, had_errors); diagnostics are printed with their positions."""
    text = _read(path)
    if text is None:
        return None, True
    units, diagnostics = parse_file(text)
    had_errors = False
    for d in diagnostics:
        print(f"{path}:{d.render()}", file=sys.stderr)
        had_errors = had_errors or d.severity == "error"
    return units, had_errors


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# Subcommands

def cmd_lint(args) -> int:
    worst = EXIT_OK
    for path in args.files:
        units, had_errors = _parse(path)
        if units is None:
            return EXIT_USAGE
        if had_errors:
            worst = max(worst, EXIT_USAGE)
            continue
        report = check_structure(units)
        for d in report.diagnostics():
            print(f"{path}: {d.render()}", file=sys.stderr)
        status = "error" if not report.ok() else "ok"
        if not report.ok():
            worst = max(worst, EXIT_CHECK_FAILED)
        print(f"{path}\t{len(units)} units\t{len(report.warnings())} warnings\t{status}")
    return worst


def cmd_assemble(args) -> int:
    worst = EXIT_OK
    for path in args.files:
        units, had_errors = _parse(path)
        if units is None or had_errors:
            return EXIT_USAGE
        interp, report = assemble(units)
        for d in report.errors + report.warnings:
            print(f"{path}: {d.render()}", file=sys.stderr)
        if report.errors:
            worst = max(worst, EXIT_CHECK_FAILED)
        lines = [f"kind\t{'kripke' if isinstance(interp, KripkeInterpretation) else 'tarskian'}"]
        if isinstance(interp, KripkeInterpretation):
            for w in interp.worlds:
                marker = "\tlocal" if w == interp.local_world else ""
                lines.append(f"world\t{w}{marker}")
            for a, b in sorted(interp.accessible):
                lines.append(f"accessible\t{a}\t{b}")
            for w in interp.worlds:
                lines.extend(_tarskian_summary(interp.per_world[w].interpretation,
                                               prefix=f"{w}\t"))
        else:
            lines.extend(_tarskian_summary(interp))
        sys.stdout.write("".join(line + "\n" for line in lines))
    return worst


def _tarskian_summary(interp, prefix: str = "") -> list[str]:
    lines = []
    for spec in interp.domains.values():
        if spec.is_finite():
            size = str(len(spec.elements))
            extent = ",".join(element_key(e) for e in spec.elements)
        else:
            size = "infinite"
            extent = spec.infinite.kind
        lines.append(f"{prefix}domain\t{spec.problem_type}\t{spec.domain_type}\t{size}\t{extent}")
    for m in interp.mappings.values():
        lines.append(f"{prefix}mapping\t{m.symbol}/{m.arity}\t{m.kind}\t{m.result_type}"
                     f"\t{len(m.entries)} entries\t{len(m.general_clauses)} clauses")
    return lines


def cmd_eval(args) -> int:
    units, had_errors = _parse(args.model)
    if units is None or had_errors:
        return EXIT_USAGE
    interp, report = assemble(units)
    if report.errors:
        for d in report.errors:
            print(d.render(), file=sys.stderr)
        return EXIT_CHECK_FAILED
    if args.formula is not None:
        text = args.formula
    else:
        text = _read(args.formula_file)
        if text is None:
            return EXIT_USAGE
    try:
        formula = parse_formula(text)
    except TptpError as e:
        print(f"formula: {e}", file=sys.stderr)
        return EXIT_USAGE
    env = Environment()
    if isinstance(interp, KripkeInterpretation):
        world = args.world or interp.local_world
        if world is None:
            print("a Kripke model needs --world or a declared $local_world",
                  file=sys.stderr)
            return EXIT_USAGE
        if world not in interp.worlds:
            print(f"unknown world {world}", file=sys.stderr)
            return EXIT_USAGE
        env = Environment(current_world=world)
    verdict = Evaluator(interp).formula(formula, env)
    line = verdict.value if not verdict.reason else f"{verdict.value}\t{verdict.reason}"
    print(line)
    return EXIT_OK if not verdict.is_unknown() else EXIT_GAVE_UP


def cmd_check(args) -> int:
    problem, p_err = _parse(args.problem)
    model, m_err = _parse(args.model)
    if problem is None or model is None or p_err or m_err:
        return EXIT_USAGE
    report = check_model(problem, model)
    for d in report.diagnostics():
        print(d.render(), file=sys.stderr)
    out = ["% unit\trole\tscope\tverdict\treason"]
    if report.evaluation is not None:
        for uv in report.evaluation.verdicts:
            from .syntax.printer import print_role
            out.append("\t".join([
                uv.unit.name, print_role(uv.unit.role), uv.scope or "-",
                uv.verdict.value, uv.verdict.reason or "-"]))
    name = Path(args.problem).stem
    out.append(szs_report(report.szs, name))
    sys.stdout.write("".join(line + "\n" for line in out))

    if args.expect is not None:
        if report.szs == args.expect:
            return EXIT_OK
        return EXIT_GAVE_UP if report.szs == SZS_GAVEUP else EXIT_CHECK_FAILED
    if report.szs in (SZS_SATISFIABLE, SZS_COUNTERSATISFIABLE):
        return EXIT_OK
    return EXIT_GAVE_UP if report.szs == SZS_GAVEUP else EXIT_CHECK_FAILED


def cmd_emit_verify(args) -> int:
    problem, p_err = _parse(args.problem)
    model, m_err = _parse(args.model)
    if problem is None or model is None or p_err or m_err:
        return EXIT_USAGE
    flavor = None if args.flavor == "auto" else args.flavor
    try:
        vp = emit_for(problem, model, conjoin_goals=args.conjoin_goals, flavor=flavor)
    except EmissionError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    _emit(vp.text(), args.output)
    return EXIT_OK


def cmd_upgrade(args) -> int:
    units, had_errors = _parse(args.file)
    if units is None or had_errors:
        return EXIT_USAGE
    upgraded = upgrade_legacy(units)
    _, report = assemble(upgraded)
    if report.errors:
        for d in report.errors:
            print(d.render(), file=sys.stderr)
        return EXIT_CHECK_FAILED
    _emit(print_units(upgraded), args.output)
    return EXIT_OK


def cmd_regrain(args) -> int:
    units, had_errors = _parse(args.file)
    if units is None or had_errors:
        return EXIT_USAGE
    try:
        new_units = regrain(units, args.to)
    except AssemblyError as e:
        for d in e.diagnostics:
            print(d.render(), file=sys.stderr)
        return EXIT_CHECK_FAILED
    _emit(print_units(new_units), args.output)
    return EXIT_OK


def cmd_dot(args) -> int:
    units, had_errors = _parse(args.file)
    if units is None or had_errors:
        return EXIT_USAGE
    interp, report = assemble(units)
    if report.errors:
        for d in report.errors:
            print(d.render(), file=sys.stderr)
        return EXIT_CHECK_FAILED
    view = args.view
    if view is None:
        view = "worlds" if isinstance(interp, KripkeInterpretation) else "domains"
    try:
        text = to_dot(interp, view)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    _emit(text, args.output)
    if args.render is not None:
        render(interp, view, args.render)
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tptpmodels",
        description="Parse, assemble, evaluate, and verify TPTP interpretations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lint", help="parse files and run structural checks")
    p.add_argument("files", nargs="+")
    p.set_defaults(fn=cmd_lint)

    p = sub.add_parser("assemble", help="assemble interpretations and print a summary")
    p.add_argument("files", nargs="+")
    p.set_defaults(fn=cmd_assemble)

    p = sub.add_parser("eval", help="evaluate one formula against a model")
    p.add_argument("--model", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--formula", help="formula text")
    group.add_argument("--formula-file", help="file holding one formula")
    p.add_argument("--world", help="world to evaluate in (Kripke models)")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("check", help="check that a model satisfies/refutes a problem")
    p.add_argument("--problem", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--expect", choices=list(SZS_VALUES))
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("emit-verify", help="emit a theorem-proving verification problem")
    p.add_argument("--problem", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--conjoin-goals", action="store_true",
                   help="emit one conjoined conjecture instead of one per goal")
    p.add_argument("--flavor", choices=["auto", "tarskian", "kripke_foml"], default="auto")
    p.set_defaults(fn=cmd_emit_verify)

    p = sub.add_parser("upgrade", help="rewrite legacy fi_* roles to interpretation roles")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_upgrade)

    p = sub.add_parser("regrain", help="re-split an interpretation at another granularity")
    p.add_argument("file")
    p.add_argument("--to", required=True, choices=list(LEVELS))
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_regrain)

    p = sub.add_parser("dot", help="emit a graph description of a model")
    p.add_argument("file")
    p.add_argument("--view", choices=["domains", "worlds"])
    p.add_argument("-o", "--output")
    p.add_argument("--render", metavar="IMAGE",
                   help="also render the graph to an image file with matplotlib")
    p.set_defaults(fn=cmd_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
