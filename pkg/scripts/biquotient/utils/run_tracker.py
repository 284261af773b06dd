"""Simple pass/fail tracker for verification runs."""

import logging
from collections import Counter
from typing import Iterable

from scripts.biquotient.models.verification_report import VerificationReport

log = logging.getLogger(__name__)


class RunTracker:
    def __init__(self):
        self.passed = 0
        self.failed = 0
        self.by_check: Counter = Counter()
        self.failures: list = []

    def add(self, report: VerificationReport) -> None:
        self.by_check[report["check"]] += 1
        if report["passed"]:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(f"{report['check']}: {report['label']}")

    def add_all(self, reports: Iterable[VerificationReport]) -> None:
        for report in reports:
            self.add(report)

    @property
    def total(self) -> int:
        return self.passed + self.failed

    @property
    def all_passed(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        checks = ", ".join(f"{name} {count}" for name, count in sorted(self.by_check.items()))
        return (
            f"Checks: {self.total} run | {self.passed} passed | {self.failed} failed"
            + (f" | {checks}" if checks else "")
        )
