"""Auditors, the seeded harness, and report rendering."""

from setasp.audits import (
    audit_antichain,
    audit_rule_satisfaction,
    audit_supportedness,
    has_set_intro_heads,
)
from setasp.harness import run_audits
from setasp.report import write_audit_report
from setasp.solve import Semantics, solve

from helpers import lits, load


def test_introduced_atoms_count_as_supported():
    program = load("p9.alog")
    a2 = lits("q(a), p(a)")
    assert audit_rule_satisfaction(program, a2)
    assert audit_supportedness(program, a2)


def test_unjustified_literal_fails_the_support_audit():
    program = load("p9.alog")
    assert not audit_supportedness(program, lits("q(a), p(a), r"))


def test_antichain():
    assert audit_antichain([lits("p"), lits("q")])
    assert not audit_antichain([lits("q(a)"), lits("q(a), p(a)")])


def test_introduction_programs_may_have_comparable_answer_sets():
    # The nested answer sets of the introduction program are legitimate;
    # the anti-chain audit only applies without introduction heads.
    program = load("p9.alog")
    result = solve(program, Semantics.ALOG)
    assert has_set_intro_heads(program)
    assert not audit_antichain(result.alog)


def test_superset_introduction_supports_extra_atoms():
    from setasp.grounding import DomainConfig, ground_program
    from setasp.parser import parse_program

    program = ground_program(
        parse_program("q(a). {X: q(X)} <= p."),
        DomainConfig(constants=frozenset({"a", "b"})),
    )
    result = solve(program, Semantics.ALOG)
    widest = lits("q(a), p(a), p(b)")
    assert widest in result.alog
    assert audit_supportedness(program, widest)


def test_harness_runs_clean(tmp_path):
    report = run_audits(seed=5, count=12)
    assert report.failures == []
    totals = report.suite_totals()
    assert totals["containment"] == (12, 0)
    assert totals["support"] == (12, 0)
    assert totals["splitting_alog"] == (12, 0)
    assert totals["splitting_slogp"][1] == 0

    written = write_audit_report(report, tmp_path / "out")
    names = {p.name for p in written}
    assert "audit_trials.csv" in names
    assert "splitting_findings.txt" in names
    assert "audit_overview.png" in names
    assert "answer_set_counts.png" in names
    for path in written:
        assert path.stat().st_size > 0
    csv_text = (tmp_path / "out" / "audit_trials.csv").read_text()
    assert csv_text.splitlines()[0] == "suite,trial,rules,universe,alog_sets,slogp_sets,ok,note"
    findings = (tmp_path / "out" / "splitting_findings.txt").read_text()
    assert "seed 5" in findings


def test_harness_is_reproducible():
    first = run_audits(seed=5, count=6)
    second = run_audits(seed=5, count=6)
    assert first.records == second.records
    assert first.findings == second.findings
