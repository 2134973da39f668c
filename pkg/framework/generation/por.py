import logging
from dataclasses import dataclass, field
from typing import Optional, Set

from generation.sequences import EmptyModelError, EventSeq, SequenceBatch
from model.abstraction import AbstractState


@dataclass
class ExploreFrame:
    state: AbstractState
    done: Set[str] = field(default_factory=set)
    sleep: Set[str] = field(default_factory=set)
    selected: Optional[str] = None


class TreeExplorer:
    """
    Depth-first traversal of an Fsm up to depth d. With a dependency
    relation, sleep sets prune sequences equivalent to ones already
    explored; without one every path up to d is produced.

    Frames carry their own done/sleep sets, so a state that appears several
    times on the stack (self-loops) keeps separate bookkeeping per visit.

    `should_stop` is polled before every frame; once it returns True the
    traversal unwinds and keeps what it has emitted so far.
    """

    def __init__(self, fsm, d, rel=None, origin="por", should_stop=None):
        if d < 1:
            raise ValueError(f"depth must be positive, got {d}")
        self.fsm = fsm
        self.d = d
        self.rel = rel
        self.origin = origin
        self.should_stop = should_stop
        self.stack = []
        self.emitted = set()
        self.partial = False

    def run(self):
        if not self.fsm.supp(self.fsm.s0):
            raise EmptyModelError("the initial state has no outgoing transitions")
        self.partial = False
        self.stack = [ExploreFrame(self.fsm.s0)]
        self._explore()
        result = sorted(EventSeq(events, origin=self.origin) for events in self.emitted if events)
        if self.partial:
            logging.warning(f"{self.origin} generation stopped by budget after {len(result)} sequences")
        logging.info(f"{self.origin} generation at depth {self.d}: {len(result)} sequences")
        return result

    def run_batch(self):
        walks = self.run()
        return SequenceBatch(walks=walks, partial=self.partial)

    def _stopped(self):
        if not self.partial and self.should_stop is not None and self.should_stop():
            self.partial = True
        return self.partial

    def _explore(self):
        frame = self.stack[-1]
        if self._stopped():
            self.stack.pop()
            return
        frame.selected = None
        enabled = []
        if len(self.stack) <= self.d:
            enabled = sorted({event for event, _ in self.fsm.supp(frame.state)})
            while not self.partial:
                pending = [e for e in enabled if e not in frame.done and e not in frame.sleep]
                if not pending:
                    break
                event = pending[0]
                frame.done.add(event)
                frame.selected = event
                for successor in self.fsm.successors(frame.state, event):
                    sleep = set()
                    if self.rel is not None:
                        sleep = {other for other in frame.sleep if self.rel.independent(event, other)}
                    self.stack.append(ExploreFrame(successor, sleep=sleep))
                    self._explore()
                    if self.partial:
                        break
                    if self.rel is not None:
                        frame.sleep.add(event)
        # emit at depth d or at a dead end; a frame whose events all sleep is
        # a prefix of an equivalent sequence already explored
        if frame.selected is None and not enabled:
            self.emitted.add(tuple(f.selected for f in self.stack[:-1]))
        self.stack.pop()


def gen_por(fsm, d, rel, should_stop=None):
    """Baseline generation with sleep-set partial-order reduction."""
    return TreeExplorer(fsm, d, rel, origin="por", should_stop=should_stop).run()


def gen_exhaustive(fsm, d, should_stop=None):
    """Every path of the model up to depth d; the unpruned oracle for gen_por."""
    return TreeExplorer(fsm, d, None, origin="exhaustive", should_stop=should_stop).run()
