import logging

from engine.session import init_session
from generation.sequences import EventSeq


class ConcreteEnumerator:
    """
    Every event sequence of length 1..d that the app accepts, explored on
    the engine itself. The engine cannot backtrack, so each tree node is
    reached by replaying its prefix on a fresh session.
    """

    def __init__(self, spec, d, seed=0):
        if d < 1:
            raise ValueError(f"depth must be positive, got {d}")
        self.spec = spec
        self.d = d
        self.seed = seed
        self.found = []
        self.replays = 0

    def _available_after(self, prefix):
        session = init_session(self.spec, self.seed)
        for event in prefix:
            session.fire(event)
        self.replays += 1
        return sorted(session.available_events())

    def _walk(self, prefix):
        for event in self._available_after(prefix):
            sequence = prefix + (event,)
            self.found.append(sequence)
            if len(sequence) < self.d:
                self._walk(sequence)

    def run(self):
        self.found = []
        self._walk(())
        logging.info(f"Enumerated {len(self.found)} sequences of {self.spec.name} up to depth {self.d} "
                     f"({self.replays} replays)")
        return len(self.found), {EventSeq(events, origin="exhaustive") for events in self.found}


def enumerate_all(spec, d, seed=0):
    return ConcreteEnumerator(spec, d, seed).run()
