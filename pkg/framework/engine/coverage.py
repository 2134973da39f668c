from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from appspec.ast_nodes import StmtId, format_stmt_id


@dataclass(frozen=True)
class EventCoverage:
    covered: int
    total: int

    @property
    def ratio(self):
        return self.covered / self.total if self.total else 0.0


@dataclass(frozen=True)
class CoverageReport:
    covered: FrozenSet[StmtId]
    total: int
    per_event: Dict[str, EventCoverage]
    # (statement id, owning event, node kind) in source order
    statements: Tuple[Tuple[StmtId, str, str], ...] = ()

    @property
    def ratio(self):
        # an app without statements reports 0.0, never a vacuous 1.0
        return len(self.covered) / self.total if self.total else 0.0

    @property
    def covered_count(self):
        return len(self.covered)

    def summary(self):
        return f"{self.covered_count}/{self.total} statements covered ({self.ratio:.2%})"

    def to_dict(self):
        return {
            "covered": self.covered_count,
            "total": self.total,
            "ratio": round(self.ratio, 4),
            "per_event": {
                event: {"covered": cov.covered, "total": cov.total, "ratio": round(cov.ratio, 4)}
                for event, cov in self.per_event.items()
            },
            "statements": [
                {"id": format_stmt_id(sid), "event": event, "kind": kind, "covered": sid in self.covered}
                for sid, event, kind in self.statements
            ],
        }


def coverage_report(spec, covered):
    """Build a report for `covered` over every coverable unit of `spec`."""
    statements = tuple((stmt.sid, event, type(stmt).__name__) for event, stmt in spec.statements())
    known = {sid for sid, _, _ in statements}
    covered = frozenset(sid for sid in covered if sid in known)
    per_event = {}
    for decl in spec.events:
        ids = [sid for sid, event, _ in statements if event == decl.name]
        per_event[decl.name] = EventCoverage(covered=sum(1 for sid in ids if sid in covered), total=len(ids))
    return CoverageReport(covered=covered, total=len(statements), per_event=per_event, statements=statements)
