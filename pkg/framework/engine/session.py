import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Tuple, Union

import numpy as np

from appspec.ast_nodes import StmtId
from engine.coverage import coverage_report
from engine.interpreter import ExecutionFault, HandlerRun


class EventNotEnabled(ValueError):
    def __init__(self, event):
        self.event = event
        super().__init__(f"event {event!r} is not enabled")


@dataclass(frozen=True)
class ConcreteState:
    # (variable, value) pairs in declaration order
    values: Tuple[Tuple[str, Union[int, bool]], ...]
    enabled: FrozenSet[str]

    def value(self, name):
        for var, value in self.values:
            if var == name:
                return value
        raise KeyError(name)

    def as_dict(self):
        return dict(self.values)


@dataclass(frozen=True)
class Finding:
    """A handler fault. `sequence` is the trace since the last reset, faulting event last."""
    event: str
    message: str
    statement: Optional[StmtId]
    sequence: Tuple[str, ...] = field(default=())


def initial_state(spec):
    return ConcreteState(
        values=tuple((decl.name, decl.initial) for decl in spec.variables),
        enabled=frozenset(decl.name for decl in spec.events if decl.initially_enabled),
    )


class EngineSession:
    """
    Single-threaded execution of one app. Coverage and per-event fire
    counts accumulate across reset(); only the app state goes back to the
    initial page.
    """

    def __init__(self, spec, seed=0):
        self.spec = spec
        self.seed = seed
        self.rng = np.random.default_rng(seed)
        self.initial = initial_state(spec)
        self.state = self.initial
        self.covered = set()
        self.fired_count = {decl.name: 0 for decl in spec.events}
        self.findings = []
        self.trace = []
        self.messages = []

    def available_events(self):
        return set(self.state.enabled)

    def fire(self, event):
        if event not in self.state.enabled:
            raise EventNotEnabled(event)

        decl = self.spec.event(event)
        values = self.state.as_dict()
        enabled = set(self.state.enabled)
        self.trace.append(event)
        run = HandlerRun(values, enabled, self.rng, self.covered, self.messages)
        try:
            run.run(decl.body)
        except ExecutionFault as fault:
            # roll back: the pre-fire state stays, coverage gathered so far is kept
            finding = Finding(event=event, message=str(fault), statement=fault.sid, sequence=tuple(self.trace))
            self.findings.append(finding)
            logging.warning(f"Handler {event} faulted after {len(self.trace)} events: {fault}")
        else:
            self.state = ConcreteState(
                values=tuple((decl.name, values[decl.name]) for decl in self.spec.variables),
                enabled=frozenset(enabled),
            )
        self.fired_count[event] += 1
        return self.state

    def coverage(self):
        return coverage_report(self.spec, self.covered)

    def reset(self):
        self.state = self.initial
        self.trace = []
        return self


def init_session(spec, seed=0):
    """GetInitPage: load the app, apply initial values and enabled events."""
    return EngineSession(spec, seed)
