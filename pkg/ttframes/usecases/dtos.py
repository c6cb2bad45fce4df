from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict


SCHEMA_PREFIX = "ttframes"


def schema_tag(kind: str) -> str:
    return f"{SCHEMA_PREFIX}/{kind}/1"


class CheckStatus(str, Enum):
    PASSED = "PASSED"
    FAILED = "FAILED"
    SKIPPED = "SKIPPED"


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    label: str
    ok: bool
    detail: str = ""


class TheoremReport:
    """Outcome of one named theorem check, made of individual labelled checks."""

    def __init__(self, name: str, checks: Optional[List[CheckResult]] = None):
        self.name = name
        self.checks: List[CheckResult] = list(checks or [])
        self.data: Dict[str, Any] = {}
        self.skipped = False
        self.skip_reason: Optional[str] = None
        self.error_message: Optional[str] = None

    @classmethod
    def skipped_report(cls, name: str, reason: str) -> "TheoremReport":
        report = cls(name)
        report.skipped = True
        report.skip_reason = reason
        return report

    @classmethod
    def error(cls, name: str, error_message: str) -> "TheoremReport":
        """A check that could not run to completion counts as failed."""
        report = cls(name)
        report.error_message = error_message
        return report

    def add(self, label: str, ok: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(label=label, ok=bool(ok), detail=detail))

    @property
    def status(self) -> CheckStatus:
        if self.skipped:
            return CheckStatus.SKIPPED
        if self.error_message is not None or not all(c.ok for c in self.checks):
            return CheckStatus.FAILED
        return CheckStatus.PASSED

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED

    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "name": self.name,
            "status": self.status.value,
            "checks": len(self.checks),
            "failures": [
                {"label": c.label, "detail": c.detail} if c.detail else {"label": c.label}
                for c in self.failures()
            ],
        }
        if self.skip_reason:
            result["reason"] = self.skip_reason
        if self.error_message:
            result["error"] = self.error_message
        if self.data:
            result["data"] = self.data
        return result


class SuiteResponse:
    def __init__(self, system_name: str, reports: Optional[List[TheoremReport]] = None):
        self.system_name = system_name
        self.reports: List[TheoremReport] = list(reports or [])
        self.success = True
        self.error_message: Optional[str] = None

    @classmethod
    def error(cls, error_message: str, system_name: str) -> "SuiteResponse":
        """Create error response."""
        response = cls(system_name)
        response.success = False
        response.error_message = error_message
        return response

    @property
    def passed(self) -> bool:
        return self.success and all(r.status is not CheckStatus.FAILED for r in self.reports)

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for report in self.reports:
            counts[report.status.value] += 1
        return counts

    def report(self, name: str) -> TheoremReport:
        for report in self.reports:
            if report.name == name:
                return report
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        if not self.success:
            return {
                "schema": schema_tag("suite"),
                "system": self.system_name,
                "success": False,
                "error": self.error_message,
            }
        return {
            "schema": schema_tag("suite"),
            "system": self.system_name,
            "success": True,
            "passed": self.passed,
            "counts": self.counts(),
            "theorems": [report.to_dict() for report in self.reports],
        }

