"""
Check Metrics for the crosscheck and verify sweeps.
Tracks gating outcomes and informational (reported) comparisons.
"""

from typing import Dict, List, Optional


class CheckMetrics:
    """Tally of check outcomes for one run."""

    def __init__(self):
        self.checks: List[Dict] = []

    def add_check(
        self,
        name: str,
        passed: bool,
        gating: bool = True,
        detail: Optional[str] = None,
        count: int = 1,
    ):
        """Record a check; `count` is how many individual equalities it covered."""
        self.checks.append({
            "name": name,
            "passed": passed,
            "gating": gating,
            "detail": detail,
            "count": count,
        })

    @property
    def failed(self) -> List[Dict]:
        return [c for c in self.checks if c["gating"] and not c["passed"]]

    @property
    def all_gating_passed(self) -> bool:
        return not self.failed

    def get_summary(self) -> Dict:
        """Quick summary of the run."""
        gating = [c for c in self.checks if c["gating"]]
        reported = [c for c in self.checks if not c["gating"]]
        return {
            "gating_checks": len(gating),
            "gating_passed": sum(1 for c in gating if c["passed"]),
            "gating_failed": len(self.failed),
            "equalities": sum(c["count"] for c in gating),
            "reported": len(reported),
            "reported_agree": sum(1 for c in reported if c["passed"]),
        }

    def summary_line(self) -> str:
        s = self.get_summary()
        return (
            f"{s['gating_passed']}/{s['gating_checks']} gating checks passed "
            f"({s['equalities']} equalities); "
            f"{s['reported_agree']}/{s['reported']} reported forms agree"
        )
