"""Seeded property suites run by the ``audit`` subcommand and the tests.

Four suites over seeded random programs:

* containment: every strict (alog) answer set is also a liberal (slog+)
  answer set;
* support: every answer set found satisfies all rules and every believed
  literal is supported by some rule;
* antichain: answer sets of programs without set-introduction heads are
  pairwise incomparable;
* splitting: split-and-compose agrees with whole-program solving. Under
  alog a disagreement fails the audit; under slog+ it is recorded as a
  finding and surfaced in the report instead of failing silently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .audits import (
    audit_antichain,
    audit_rule_satisfaction,
    audit_supportedness,
    has_set_intro_heads,
    splitting_violations,
)
from .generator import GeneratorConfig, random_program, random_splitting_set
from .parser import pretty_print
from .solve import Semantics, solve
from .syntax import format_interpretation, interpretation_sort_key


@dataclass(frozen=True)
class TrialRecord:
    suite: str
    trial: int
    rules: int
    universe: int
    alog_count: int
    slogp_count: int
    ok: bool
    note: str = ""


@dataclass
class AuditReport:
    seed: int
    count: int
    records: list[TrialRecord] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    @property
    def failures(self) -> list[TrialRecord]:
        return [r for r in self.records if not r.ok]

    def suite_totals(self) -> dict[str, tuple[int, int]]:
        totals: dict[str, tuple[int, int]] = {}
        for record in self.records:
            passed, failed = totals.get(record.suite, (0, 0))
            if record.ok:
                passed += 1
            else:
                failed += 1
            totals[record.suite] = (passed, failed)
        return totals

    def summary_lines(self) -> list[str]:
        lines = []
        for suite, (passed, failed) in sorted(self.suite_totals().items()):
            verdict = "PASS" if failed == 0 else "FAIL"
            lines.append(f"{suite}: {verdict} ({passed + failed} trials, {failed} violations)")
        lines.append(f"findings: {len(self.findings)} (slog+ splitting, reported not failed)")
        return lines


_PROGRAM_CONFIG = GeneratorConfig(max_rules=6, max_universe=9)
_PROGRAM_CONFIG_INTS = GeneratorConfig(max_rules=6, max_universe=9, with_integers=True, int_max=2)
_SPLIT_CONFIG = GeneratorConfig(max_rules=5, max_universe=8)


def run_audits(seed: int, count: int, *, universe_cap: int = 14) -> AuditReport:
    """Run all suites over ``count`` seeded trials each."""
    report = AuditReport(seed=seed, count=count)
    rng = random.Random(seed)

    for trial in range(count):
        config = _PROGRAM_CONFIG_INTS if trial % 5 == 4 else _PROGRAM_CONFIG
        program = random_program(rng, config)
        result = solve(program, Semantics.BOTH, universe_cap=universe_cap)
        assert result.alog is not None and result.slog_plus is not None
        rules = len(program.rules)
        universe = result.stats["universe"]

        contained = set(result.alog) <= set(result.slog_plus)
        report.records.append(TrialRecord(
            "containment", trial, rules, universe,
            len(result.alog), len(result.slog_plus), contained,
            "" if contained else "an alog answer set is not a slog+ answer set",
        ))

        found = sorted({*result.alog, *result.slog_plus}, key=interpretation_sort_key)
        bad_support = [
            interp
            for interp in found
            if not (audit_rule_satisfaction(program, interp) and audit_supportedness(program, interp))
        ]
        report.records.append(TrialRecord(
            "support", trial, rules, universe,
            len(result.alog), len(result.slog_plus), not bad_support,
            "" if not bad_support else f"unsupported: {format_interpretation(bad_support[0])}",
        ))

        if not has_set_intro_heads(program):
            chains_ok = audit_antichain(result.alog) and audit_antichain(result.slog_plus)
            report.records.append(TrialRecord(
                "antichain", trial, rules, universe,
                len(result.alog), len(result.slog_plus), chains_ok,
                "" if chains_ok else "comparable answer sets",
            ))

    for trial in range(count):
        program = random_program(rng, _SPLIT_CONFIG)
        literals = random_splitting_set(rng, program)
        alog_violations = splitting_violations(program, literals, Semantics.ALOG,
                                               universe_cap=universe_cap)
        report.records.append(TrialRecord(
            "splitting_alog", trial, len(program.rules), len(literals),
            -1, -1, not alog_violations,
            "" if not alog_violations else _describe_violation(alog_violations[0]),
        ))
        slogp_violations = splitting_violations(program, literals, Semantics.SLOG_PLUS,
                                                universe_cap=universe_cap)
        report.records.append(TrialRecord(
            "splitting_slogp", trial, len(program.rules), len(literals),
            -1, -1, True,
            "" if not slogp_violations else f"{len(slogp_violations)} finding(s)",
        ))
        for violation in slogp_violations:
            report.findings.append(
                "slog+ splitting disagreement\n"
                f"program:\n{pretty_print(program)}"
                f"splitting set: {format_interpretation(literals)}\n"
                f"candidate: {format_interpretation(violation.candidate)} "
                f"(whole={violation.in_whole}, composed={violation.in_composed}) {violation.note}\n"
            )

    return report


def _describe_violation(violation) -> str:
    return (
        f"candidate {format_interpretation(violation.candidate)} "
        f"whole={violation.in_whole} composed={violation.in_composed}"
    )
