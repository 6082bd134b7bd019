import json
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class Status(str, Enum):
    PROVED_EXACT = "proved_exact"
    PASSED_NUMERIC = "passed_numeric"
    FAILED = "failed"
    SKIPPED_SINGULAR = "skipped_singular"


@dataclass
class VerificationReport:
    """The outcome of verifying one identity record"""

    id: str
    status: str
    points_tested: int
    max_residual: str
    terms_used: int = 0
    max_n: Optional[int] = None
    seed: Optional[int] = None
    elapsed_ms: float = 0.0
    probabilistic: bool = False
    witness: Optional[Dict[str, Any]] = None
    notes: str = ""

    @property
    def failed(self) -> bool:
        return self.status == Status.FAILED

    @staticmethod
    def from_dict(data: Dict[str, Any]) -> "VerificationReport":
        return VerificationReport(**data)

    @staticmethod
    def from_json(line: str) -> "VerificationReport":
        return VerificationReport.from_dict(json.loads(line))

    def to_dict(self, timings: bool = True) -> Dict[str, Any]:
        data = asdict(self)
        if not timings:
            data["elapsed_ms"] = 0.0
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


@dataclass
class Summary:
    total: int = 0
    proved_exact: int = 0
    passed_numeric: int = 0
    failed: int = 0
    skipped: int = 0

    @staticmethod
    def from_reports(reports: List[VerificationReport]) -> "Summary":
        statuses = [report.status for report in reports]
        return Summary(
            total=len(reports),
            proved_exact=statuses.count(Status.PROVED_EXACT),
            passed_numeric=statuses.count(Status.PASSED_NUMERIC),
            failed=statuses.count(Status.FAILED),
            skipped=statuses.count(Status.SKIPPED_SINGULAR),
        )

    def line(self, status: str) -> str:
        return (
            f"total: {self.total}, proved_exact: {self.proved_exact}, passed_numeric: {self.passed_numeric}, "
            f"failed: {self.failed}, skipped: {self.skipped}, status: {status}"
        )


@dataclass
class AggregateReport:
    """All reports of one run together with the config which produced them.

    Reports are kept sorted by id so two runs with the same config serialize identically, apart from timings."""

    config: Dict[str, Any]
    reports: List[VerificationReport] = field(default_factory=list)
    summary: Summary = field(default_factory=Summary)

    @staticmethod
    def from_reports(config: Dict[str, Any], reports: List[VerificationReport]) -> "AggregateReport":
        ordered = sorted(reports, key=lambda report: report.id)
        return AggregateReport(config=config, reports=ordered, summary=Summary.from_reports(ordered))

    @property
    def status(self) -> str:
        if self.summary.total == 0:
            return "ok-empty"
        if self.summary.failed:
            return "failed"
        return "ok"

    @property
    def failed(self) -> bool:
        return self.status == "failed"

    def to_json(self, timings: bool = True) -> str:
        data = {
            "config": self.config,
            "reports": [report.to_dict(timings) for report in self.reports],
            "summary": asdict(self.summary),
        }
        return json.dumps(data, ensure_ascii=False, indent=2)

    @staticmethod
    def from_json(text: str) -> "AggregateReport":
        data = json.loads(text)
        return AggregateReport(
            config=data["config"],
            reports=[VerificationReport.from_dict(report) for report in data["reports"]],
            summary=Summary(**data["summary"]),
        )
