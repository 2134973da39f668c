import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from appspec.ast_nodes import StmtId
from engine.session import Finding


@dataclass(frozen=True)
class SequenceStats:
    index: int
    events: Tuple[str, ...]
    fired: int
    skipped: int
    covered_delta: FrozenSet[StmtId] = field(default_factory=frozenset)
    findings: Tuple[Finding, ...] = ()

    def to_dict(self):
        return {
            "index": self.index,
            "length": len(self.events),
            "fired": self.fired,
            "skipped": self.skipped,
            "new_statements": len(self.covered_delta),
            "findings": len(self.findings),
        }


def execute_sequence(session, seq, index=0):
    """
    Fire the events of `seq` in order on a fresh or freshly reset session.
    An event that is not enabled at its turn is skipped and execution goes
    on; skips never contribute coverage.
    """
    before = set(session.covered)
    findings_before = len(session.findings)
    fired = skipped = 0
    for event in seq:
        if event in session.available_events():
            session.fire(event)
            fired += 1
        else:
            skipped += 1
            logging.debug(f"Sequence {index}: skipped {event} (not enabled)")
    if skipped:
        logging.warning(f"Sequence {index}: {skipped} of {len(tuple(seq))} events were not enabled and skipped")
    return SequenceStats(
        index=index,
        events=tuple(seq),
        fired=fired,
        skipped=skipped,
        covered_delta=frozenset(session.covered - before),
        findings=tuple(session.findings[findings_before:]),
    )
