"""Command line front door.

Subcommands: ``solve`` (print answer sets), ``check`` (verdict for one
candidate, optionally with the witnessing reduct), ``diff`` (answer sets
exclusive to each semantics), ``parse`` (validate only), and ``audit``
(property suites, optionally rendered to a report directory).

Exit codes: 0 success, 1 usage or program error, 2 a size cap was
exceeded, 3 audit failure. Output is deterministic for fixed inputs and
flags: literals are sorted by predicate, then arguments, negative last.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .errors import CapExceeded, NotASplittingSet, UnsafeRule
from .grounding import DomainConfig, ground_program
from .harness import run_audits
from .parser import ParseError, parse_literals, parse_program
from .slogplus import witnessing_weak_reduct
from .solve import Semantics, solve
from .syntax import GroundProgram, format_interpretation, sorted_literals


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for caps only
        raise _UsageError(message)


_SEMANTICS = {"alog": Semantics.ALOG, "slog+": Semantics.SLOG_PLUS, "both": Semantics.BOTH}


def build_arg_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="setasp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("file", help="program file (.alog, UTF-8)")
        p.add_argument("--int-range", metavar="MIN..MAX", default=None,
                       help="integer domain override, e.g. 0..3")
        p.add_argument("--cap", type=int, default=20,
                       help="candidate universe cap (default 20)")
        p.add_argument("--json", action="store_true", help="emit one JSON document")

    p_solve = sub.add_parser("solve", help="print all answer sets")
    common(p_solve)
    p_solve.add_argument("--semantics", choices=sorted(_SEMANTICS), default="alog")
    p_solve.set_defaults(func=cmd_solve)

    p_check = sub.add_parser("check", help="check one candidate answer set")
    common(p_check)
    p_check.add_argument("--set", dest="literals", required=True,
                         help='candidate literals, e.g. "p(1),q(a)" (empty for {})')
    p_check.add_argument("--semantics", choices=sorted(_SEMANTICS), default="both")
    p_check.add_argument("--show-reduct", action="store_true",
                         help="print the reduct that witnesses the verdict")
    p_check.set_defaults(func=cmd_check)

    p_diff = sub.add_parser("diff", help="answer sets exclusive to each semantics")
    common(p_diff)
    p_diff.set_defaults(func=cmd_diff)

    p_parse = sub.add_parser("parse", help="validate a program file")
    p_parse.add_argument("file")
    p_parse.set_defaults(func=cmd_parse)

    p_audit = sub.add_parser("audit", help="run the seeded property suites")
    p_audit.add_argument("--seed", type=int, default=0)
    p_audit.add_argument("--count", type=int, default=100, help="trials per suite")
    p_audit.add_argument("--report-dir", default=None,
                         help="write CSV, figures, and findings here")
    p_audit.add_argument("--json", action="store_true")
    p_audit.set_defaults(func=cmd_audit)

    return parser


def _parse_int_range(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if match is None:
        raise _UsageError(f"bad --int-range {text!r}, expected MIN..MAX")
    lo, hi = int(match.group(1)), int(match.group(2))
    if lo > hi:
        raise _UsageError(f"empty --int-range {text!r}")
    return lo, hi


def _load_ground(args) -> GroundProgram:
    path = Path(args.file)
    try:
        source = path.read_text(encoding="utf-8")
    except OSError as err:
        raise _UsageError(str(err)) from None
    try:
        program = parse_program(source)
    except ParseError as err:
        raise _UsageError(f"{path}:{err}") from None
    int_range = _parse_int_range(args.int_range) if args.int_range else None
    try:
        return ground_program(program, DomainConfig.from_program(program, int_range))
    except UnsafeRule as err:
        raise _UsageError(f"{path}: {err}") from None


def _emit_sets(label: str | None, found, out) -> None:
    prefix = f"{label}: " if label else ""
    if not found:
        print(f"{prefix}INCONSISTENT", file=out)
        return
    for interp in found:
        print(f"{prefix}{format_interpretation(interp)}", file=out)


def cmd_solve(args) -> int:
    program = _load_ground(args)
    mode = _SEMANTICS[args.semantics]
    result = solve(program, mode, universe_cap=args.cap)
    if args.json:
        payload = {
            "program": args.file,
            "semantics": args.semantics,
            "answer_sets": _sets_payload(result),
            "stats": result.stats,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    if mode is Semantics.BOTH:
        _emit_sets("alog", result.alog, sys.stdout)
        _emit_sets("slog+", result.slog_plus, sys.stdout)
    else:
        _emit_sets(None, result.for_semantics(mode), sys.stdout)
    return 0


def _rules_text(program) -> str:
    return "\n".join(str(r) for r in program.rules)


def _sets_payload(result) -> dict:
    payload = {}
    if result.alog is not None:
        payload["alog"] = [[str(l) for l in sorted_literals(s)] for s in result.alog]
    if result.slog_plus is not None:
        payload["slog+"] = [[str(l) for l in sorted_literals(s)] for s in result.slog_plus]
    return payload


def cmd_check(args) -> int:
    program = _load_ground(args)
    try:
        candidate = frozenset(parse_literals(args.literals))
    except ParseError as err:
        raise _UsageError(f"--set: {err}") from None
    mode = _SEMANTICS[args.semantics]
    verdicts: dict[str, dict] = {}

    if mode in (Semantics.ALOG, Semantics.BOTH):
        from .alog import is_alog_answer_set, set_intro_reduct, set_reduct

        holds = is_alog_answer_set(program, candidate, subset_cap=args.cap)
        entry: dict = {"is_answer_set": holds}
        if args.show_reduct:
            entry["reduct"] = _rules_text(set_reduct(set_intro_reduct(program, candidate), candidate))
        verdicts["alog"] = entry

    if mode in (Semantics.SLOG_PLUS, Semantics.BOTH):
        witness, total = witnessing_weak_reduct(program, candidate, subset_cap=args.cap)
        entry = {"is_answer_set": witness is not None, "reducts": total}
        if args.show_reduct and witness is not None:
            entry["reduct"] = _rules_text(witness)
        verdicts["slog+"] = entry

    if args.json:
        payload = {
            "program": args.file,
            "semantics": args.semantics,
            "candidate": [str(l) for l in sorted_literals(candidate)],
            "verdicts": verdicts,
            "stats": {"ground_rules": len(program.rules)},
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0

    single = mode is not Semantics.BOTH
    for name in ("alog", "slog+"):
        entry = verdicts.get(name)
        if entry is None:
            continue
        prefix = "" if single else f"{name}: "
        if entry["is_answer_set"]:
            verdict = "ANSWER SET"
        elif name == "slog+":
            n = entry["reducts"]
            verdict = f"NOT AN ANSWER SET ({n} reduct{'s' if n != 1 else ''} tried)"
        else:
            verdict = "NOT AN ANSWER SET"
        print(f"{prefix}{verdict}")
        if "reduct" in entry:
            text = entry["reduct"].rstrip("\n")
            print(text if text else "(empty reduct)")
    return 0


def cmd_diff(args) -> int:
    program = _load_ground(args)
    result = solve(program, Semantics.BOTH, universe_cap=args.cap)
    assert result.alog is not None and result.slog_plus is not None
    only_alog = [s for s in result.alog if s not in set(result.slog_plus)]
    only_slogp = [s for s in result.slog_plus if s not in set(result.alog)]
    if args.json:
        payload = {
            "program": args.file,
            "semantics": "both",
            "answer_sets": _sets_payload(result),
            "alog_only": [[str(l) for l in sorted_literals(s)] for s in only_alog],
            "slog+_only": [[str(l) for l in sorted_literals(s)] for s in only_slogp],
            "stats": result.stats,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    if not only_alog and not only_slogp:
        print("NO DIFFERENCE")
        return 0
    for interp in only_alog:
        print(f"alog only: {format_interpretation(interp)}")
    for interp in only_slogp:
        print(f"slog+ only: {format_interpretation(interp)}")
    return 0


def cmd_parse(args) -> int:
    path = Path(args.file)
    try:
        source = path.read_text(encoding="utf-8")
    except OSError as err:
        raise _UsageError(str(err)) from None
    try:
        program = parse_program(source)
    except ParseError as err:
        raise _UsageError(f"{path}:{err}") from None
    print(f"OK: {len(program.rules)} rule(s)")
    return 0


def cmd_audit(args) -> int:
    report = run_audits(args.seed, args.count)
    written = []
    if args.report_dir:
        from .report import write_audit_report

        written = write_audit_report(report, args.report_dir)
    if args.json:
        payload = {
            "seed": report.seed,
            "count": report.count,
            "suites": {
                suite: {"passed": passed, "failed": failed}
                for suite, (passed, failed) in report.suite_totals().items()
            },
            "failures": len(report.failures),
            "findings": len(report.findings),
            "report_files": [str(p) for p in written],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in report.summary_lines():
            print(line)
        for path in written:
            print(f"wrote {path}")
        if report.findings and not args.report_dir:
            print("-- findings --")
            for finding in report.findings:
                print(finding)
    return 3 if report.failures else 0


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        print(f"setasp: {err}", file=sys.stderr)
        return 1
    except (CapExceeded,) as err:
        print(f"setasp: {err}", file=sys.stderr)
        return 2
    except NotASplittingSet as err:
        print(f"setasp: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
