"""Render an audit report to files: a CSV of trials, figures, findings.

Written into the directory given to ``setasp audit --report-dir``:

* ``audit_trials.csv``: one row per trial and suite;
* ``audit_overview.png``: passed/failed bars per suite;
* ``answer_set_counts.png``: distribution of answer-set counts per
  semantics over the random programs;
* ``splitting_findings.txt``: the recorded slog+ splitting findings, or a
  note that there were none.
"""

from __future__ import annotations

import csv
from pathlib import Path

from .harness import AuditReport


def write_audit_report(report: AuditReport, outdir: str | Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written = [
        _write_csv(report, outdir / "audit_trials.csv"),
        _write_findings(report, outdir / "splitting_findings.txt"),
    ]
    written.extend(_write_figures(report, outdir))
    return written


def _write_csv(report: AuditReport, path: Path) -> Path:
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["suite", "trial", "rules", "universe", "alog_sets", "slogp_sets", "ok", "note"])
        for r in report.records:
            writer.writerow([r.suite, r.trial, r.rules, r.universe,
                             r.alog_count, r.slogp_count, int(r.ok), r.note])
    return path


def _write_findings(report: AuditReport, path: Path) -> Path:
    with path.open("w") as handle:
        handle.write(f"seed {report.seed}, {report.count} trials per suite\n")
        if not report.findings:
            handle.write("no slog+ splitting findings\n")
        else:
            handle.write(f"{len(report.findings)} slog+ splitting finding(s)\n\n")
            for finding in report.findings:
                handle.write(finding)
                handle.write("\n")
    return path


def _write_figures(report: AuditReport, outdir: Path) -> list[Path]:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    written = []

    totals = report.suite_totals()
    suites = sorted(totals)
    passed = [totals[s][0] for s in suites]
    failed = [totals[s][1] for s in suites]
    fig, ax = plt.subplots(figsize=(7, 3.5))
    ax.bar(suites, passed, label="passed", color="#4a7c59")
    ax.bar(suites, failed, bottom=passed, label="failed", color="#b23a48")
    ax.set_ylabel("trials")
    ax.set_title(f"audit suites (seed {report.seed})")
    ax.legend()
    plt.setp(ax.get_xticklabels(), rotation=20, ha="right")
    fig.tight_layout()
    overview = outdir / "audit_overview.png"
    fig.savefig(overview)
    plt.close(fig)
    written.append(overview)

    counts = [(r.alog_count, r.slogp_count) for r in report.records
              if r.suite == "containment"]
    if counts:
        alog_counts = [a for a, _ in counts]
        slogp_counts = [s for _, s in counts]
        top = max(alog_counts + slogp_counts)
        bins = [x - 0.5 for x in range(top + 2)]
        fig, ax = plt.subplots(figsize=(7, 3.5))
        ax.hist([alog_counts, slogp_counts], bins=bins, label=["alog", "slog+"],
                color=["#35586c", "#c98a2b"])
        ax.set_xlabel("answer sets per program")
        ax.set_ylabel("programs")
        ax.set_title("answer-set counts over random programs")
        ax.legend()
        fig.tight_layout()
        hist = outdir / "answer_set_counts.png"
        fig.savefig(hist)
        plt.close(fig)
        written.append(hist)

    return written
