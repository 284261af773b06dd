"""CLI front door: Hilbert functions, model cohomology and verification batches.

Usage:
    python -m scripts.biquotient hilbert --file ring.json --max-degree 8
    python -m scripts.biquotient model --case "n=1,k=1,a=0,b=0,two-sided"
    python -m scripts.biquotient verify --all-small --workers 4 --out reports/

Exit status: 0 success (all checks pass), 1 a verification failed, 2 input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from scripts.biquotient.config import (
    ALL_SMALL_DEGREE, ENGINE_VERSION, FILE_DEGREE, ORACLE_DEGREE, ORACLE_GROUPS, WORKERS,
)
from scripts.biquotient.errors import BiquotientError
from scripts.biquotient.grassmann.builders import build_model
from scripts.biquotient.grassmann.cases import parse_case
from scripts.biquotient.grassmann.verify import plan_all_small, plan_case, run_batch
from scripts.biquotient.models.run_config import RunConfig
from scripts.biquotient.models.verification_report import VerificationReport
from scripts.biquotient.presentations.quotient import hilbert_function
from scripts.biquotient.presentations.serialization import load_model, load_presentation, model_to_dict
from scripts.biquotient.reporting.formatter import render_batch, render_cohomology, render_hilbert
from scripts.biquotient.reporting.writer import append_step_summary, write_output, write_report_dir
from scripts.biquotient.sullivan.cohomology import cohomology
from scripts.biquotient.sullivan.model import validate
from scripts.biquotient.utils.logging_config import setup_logging
from scripts.biquotient.utils.run_tracker import RunTracker

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


# ── Commands ────────────────────────────────────────────────────────────────

def cmd_hilbert(config: RunConfig) -> int:
    presentation = load_presentation(config["file"])
    D = FILE_DEGREE if config["max_degree"] is None else config["max_degree"]
    table = hilbert_function(presentation, D)
    write_output(render_hilbert(table, presentation.label, config["fmt"]), config["out"])
    return EXIT_OK


def cmd_model(config: RunConfig) -> int:
    if config["file"]:
        model = load_model(config["file"])
        validate(model)
        D = FILE_DEGREE if config["max_degree"] is None else config["max_degree"]
    else:
        case = parse_case(config["case"])
        model = build_model(case)
        D = case.default_cutoff() if config["max_degree"] is None else config["max_degree"]
    log.info("Cohomology of %s up to degree %d", model.label or config["file"], D)
    report = cohomology(model, D, representatives=config["representatives"])
    write_output(render_cohomology(report, config["fmt"], model_to_dict(model)), config["out"])
    return EXIT_OK


def cmd_verify(config: RunConfig) -> int:
    tracker = RunTracker()
    if config["all_small"]:
        D = ALL_SMALL_DEGREE if config["max_degree"] is None else config["max_degree"]
        oracle = ORACLE_DEGREE if config["max_degree"] is None else config["max_degree"]
        jobs = plan_all_small(D, ORACLE_GROUPS, oracle)
    else:
        jobs = plan_case(parse_case(config["case"]), config["max_degree"])

    log.info("=" * 60)
    log.info("VERIFICATION — %d checks (engine %s)", len(jobs), ENGINE_VERSION)
    log.info("=" * 60)

    reports = run_batch(jobs, workers=config["workers"])
    tracker.add_all(reports)
    _emit_reports(reports, config)
    _log_summary(tracker, reports)
    return EXIT_OK if tracker.all_passed else EXIT_FAILED


def _emit_reports(reports: List[VerificationReport], config: RunConfig) -> None:
    out = config["out"]
    if out and Path(out).is_dir():
        write_report_dir(reports, out, config["fmt"])
        return
    write_output(render_batch(reports, config["fmt"]), out)


def _log_summary(tracker: RunTracker, reports: List[VerificationReport]) -> None:
    log.info("")
    log.info("=" * 60)
    log.info("VERIFICATION COMPLETE — %s", "ALL PASS" if tracker.all_passed else "FAILURES")
    log.info("=" * 60)
    log.info("  %s", tracker.summary())
    for failure in tracker.failures:
        log.warning("  failed: %s", failure)
    append_step_summary(reports, tracker.summary())


COMMANDS = {"hilbert": cmd_hilbert, "model": cmd_model, "verify": cmd_verify}


# ── Argument handling ──────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m scripts.biquotient",
        description="Exact Sullivan models and cohomology of homogeneous spaces and biquotients",
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="What to compute")
    parser.add_argument("--case", type=str, help='Grassmannian case, e.g. "n=1,k=1,a=0,b=0,two-sided"')
    parser.add_argument("--file", type=str, help="JSON presentation (hilbert) or model (model) file")
    parser.add_argument("--max-degree", type=int, default=None, help="Degree cutoff D")
    parser.add_argument("--format", dest="fmt", choices=["json", "text"], default="text", help="Output format")
    parser.add_argument("--representatives", action="store_true", help="Also print cocycle representatives")
    parser.add_argument("--all-small", action="store_true", help="Verify every small case, the block cases and the catalog oracle")
    parser.add_argument("--out", type=str, default=None, help="Output file, or directory for one file per report")
    parser.add_argument("--workers", type=int, default=WORKERS, help="Processes for verification batches")
    parser.add_argument("--verbose", action="store_true", help="Enable debug logging")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    return {
        "command": args.command,
        "case": args.case,
        "file": args.file,
        "max_degree": args.max_degree,
        "fmt": args.fmt,
        "out": args.out,
        "representatives": args.representatives,
        "all_small": args.all_small,
        "workers": args.workers,
        "verbose": args.verbose,
    }


def check_config(config: RunConfig) -> Optional[str]:
    """A message describing the first problem, or None when the config can be dispatched."""
    if config["max_degree"] is not None and config["max_degree"] < 0:
        return f"--max-degree must be >= 0, got {config['max_degree']}"
    if config["workers"] < 1:
        return f"--workers must be >= 1, got {config['workers']}"
    command = config["command"]
    if command == "hilbert" and not config["file"]:
        return "hilbert needs --file"
    if command == "model" and bool(config["file"]) == bool(config["case"]):
        return "model needs exactly one of --file or --case"
    if command == "verify" and bool(config["case"]) == config["all_small"]:
        return "verify needs exactly one of --case or --all-small"
    return None


def cli(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config = to_config(args)
    setup_logging(verbose=config["verbose"])

    problem = check_config(config)
    if problem:
        log.error("%s", problem)
        return EXIT_INPUT

    try:
        return COMMANDS[config["command"]](config)
    except BiquotientError as e:
        log.error("%s", e)
        return EXIT_INPUT
    except OSError as e:
        log.error("I/O error: %s", e)
        return EXIT_INPUT


def main():
    sys.exit(cli())


if __name__ == "__main__":
    main()
