import json
from typing import Dict, List

from swatchlink.invariants.checks import CheckReport
from swatchlink.pydantic import BaseModel


class VerifyResults(BaseModel):
    """
    Check reports of a verify run grouped by suite. Notes are informational
    and never count as failures.
    """

    suites: Dict[str, List[CheckReport]] = {}
    notes: List[CheckReport] = []

    def add(self, suite: str, reports: List[CheckReport]):
        self.suites.setdefault(suite, []).extend(reports)

    def note(self, report: CheckReport):
        self.notes.append(report)

    def failed(self) -> List[CheckReport]:
        return [r for reports in self.suites.values() for r in reports if not r.holds]

    def counts(self) -> Dict[str, Dict[str, int]]:
        return {
            suite: {
                "passed": sum(1 for r in reports if r.holds),
                "failed": sum(1 for r in reports if not r.holds),
            }
            for suite, reports in self.suites.items()
        }

    @property
    def passed(self) -> bool:
        return not self.failed()

    def summary(self) -> dict:
        counts = self.counts()
        return {
            "passed": sum(c["passed"] for c in counts.values()),
            "failed": sum(c["failed"] for c in counts.values()),
            "suites": counts,
            "notes": len(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.dict(), sort_keys=True, indent=2)

    def render(self) -> str:
        lines = []
        for suite, reports in self.suites.items():
            for report in reports:
                status = "PASS" if report.holds else "FAIL"
                lines.append(f"{status} {suite}: {report.name}")
        for report in self.notes:
            status = "holds" if report.holds else "differs"
            lines.append(f"NOTE {report.name}: {status} {_details(report)}")
        summary = self.summary()
        lines.append(f"{summary['passed']} passed, {summary['failed']} failed")
        return "\n".join(lines)


def _details(report: CheckReport) -> str:
    return " ".join(f"{key}={value}" for key, value in sorted(report.details.items()))
