"""Render tables and reports as aligned text (pandas) or deterministic JSON."""

import json
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from scripts.biquotient.algebra.element import Element
from scripts.biquotient.config import ENGINE_VERSION
from scripts.biquotient.models.cohomology_report import CohomologyReport
from scripts.biquotient.models.hilbert_table import HilbertTable
from scripts.biquotient.models.verification_report import VerificationReport
from scripts.biquotient.presentations.serialization import element_to_json


def hilbert_line(dims: Sequence[int]) -> str:
    """'1 0 0 0 1', the one-line form printed by the hilbert and model commands."""
    return " ".join(str(d) for d in dims)


def _degree_frame(rows: Dict[str, Sequence[Any]]) -> pd.DataFrame:
    width = max(len(v) for v in rows.values())
    return pd.DataFrame(list(rows.values()), index=list(rows.keys()), columns=range(width))


def cohomology_text(report: CohomologyReport) -> str:
    """The dims line, then representative cocycles per degree when they were computed."""
    lines = [hilbert_line(report["dims"])]
    reps = report.get("representatives")
    if reps:
        for d, elements in sorted(reps.items()):
            lines.append(f"H^{d}: " + "; ".join(str(x) for x in elements))
    return "\n".join(lines)


def verification_text(report: VerificationReport) -> str:
    verdict = "PASS" if report["passed"] else "FAIL"
    frame = _degree_frame({
        "A": report["table_a"],
        "B": report["table_b"],
        "match": ["=" if v["match"] else "X" for v in report["degrees"]],
    })
    lines = [
        f"[{verdict}] {report['check']}: {report['label']} (D={report['max_degree']})",
        f"  A: {report['source_a']}",
        f"  B: {report['source_b']}",
        frame.to_string(),
        f"checksum: A={sum(report['table_a'])} B={sum(report['table_b'])}",
    ]
    lines += [f"  note: {n}" for n in report["notes"]]
    return "\n".join(lines)


def batch_summary_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "check": r["check"],
                "label": r["label"],
                "D": r["max_degree"],
                "verdict": "PASS" if r["passed"] else "FAIL",
            }
            for r in reports
        ],
        columns=["check", "label", "D", "verdict"],
    )


def batch_summary_text(reports: Sequence[VerificationReport]) -> str:
    passed = sum(1 for r in reports if r["passed"])
    frame = batch_summary_frame(reports)
    body = frame.to_string(index=False) if len(frame) else "(no checks)"
    return f"{body}\n{passed}/{len(reports)} checks passed"


# ── JSON ────────────────────────────────────────────────────────────────────

def _jsonable(value: Any) -> Any:
    if isinstance(value, Element):
        return element_to_json(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def to_json(payload: Dict[str, Any]) -> str:
    data = dict(_jsonable(payload))
    data["engine_version"] = ENGINE_VERSION
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def batch_json(reports: Sequence[VerificationReport]) -> str:
    passed = sum(1 for r in reports if r["passed"])
    return to_json({"reports": list(reports), "passed": passed, "total": len(reports)})


def render_batch(reports: Sequence[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return batch_json(reports)
    blocks: List[str] = [verification_text(r) for r in reports]
    blocks.append(batch_summary_text(reports))
    return "\n\n".join(blocks)


def render_cohomology(report: CohomologyReport, fmt: str, model: Optional[Dict[str, Any]] = None) -> str:
    """With a model dump, the JSON form also carries the model it was computed from."""
    if fmt == "json":
        return to_json({**report, "model": model} if model is not None else dict(report))
    return cohomology_text(report)


def render_hilbert(table: HilbertTable, label: str, fmt: str) -> str:
    if fmt == "json":
        return to_json({"label": label, **table})
    return hilbert_line(table["dims"])
