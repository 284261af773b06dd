"""Write rendered output to stdout, a file, or one file per report in a directory."""

import logging
import os
from pathlib import Path
from typing import Optional, Sequence

from slugify import slugify

from scripts.biquotient.models.verification_report import VerificationReport
from scripts.biquotient.reporting.formatter import (
    batch_json, batch_summary_text, to_json, verification_text,
)

log = logging.getLogger(__name__)


def write_output(text: str, out: Optional[str] = None) -> None:
    """stdout when no path is given; otherwise the file at `out`."""
    if not out:
        print(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")
    log.info("Wrote %s", path)


def report_filename(report: VerificationReport, fmt: str) -> str:
    ext = "json" if fmt == "json" else "txt"
    return f"{slugify(report['check'] + ' ' + report['label'])}.{ext}"


def write_report_dir(reports: Sequence[VerificationReport], directory: str, fmt: str) -> None:
    """One file per report, named by the slugified check and label, plus a summary file."""
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    for report in reports:
        body = to_json(dict(report)) if fmt == "json" else verification_text(report)
        (root / report_filename(report, fmt)).write_text(body + "\n", encoding="utf-8")
    summary = batch_json(reports) if fmt == "json" else batch_summary_text(reports)
    summary_name = "summary.json" if fmt == "json" else "summary.txt"
    (root / summary_name).write_text(summary + "\n", encoding="utf-8")
    log.info("Wrote %d reports to %s", len(reports), root)


def append_step_summary(reports: Sequence[VerificationReport], headline: str) -> None:
    """Markdown table for GitHub Actions, when GITHUB_STEP_SUMMARY is set."""
    summary_file = os.getenv("GITHUB_STEP_SUMMARY")
    if not summary_file:
        return
    lines = [
        "## Biquotient Verification Run",
        f"- **Result**: {headline}",
        "",
        "| Check | Case | D | Verdict |",
        "|-------|------|---|---------|",
    ]
    for r in reports:
        lines.append(f"| {r['check']} | {r['label'][:50]} | {r['max_degree']} | {'PASS' if r['passed'] else 'FAIL'} |")
    with open(summary_file, "a") as f:
        f.write("\n".join(lines) + "\n")
