import logging
import time
from dataclasses import dataclass
from fractions import Fraction

from engine.session import init_session
from model.abstraction import Abstraction, abstract_state
from model.fsm import Fsm
from model.selection import Strategy, select_event
from utils.rng import CONSTRUCTION_STREAM, SELECTION_STREAM, derive_seed, make_rng


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    # str() first so 0.7 becomes 7/10 rather than its binary float value
    return Fraction(str(value))


@dataclass
class BuildConfig:
    max_length: int = 99
    restarts: int = 2
    strategy: Strategy = Strategy.RANDOM
    abstraction: Abstraction = Abstraction.COARSE
    alpha: Fraction = Fraction(7, 10)
    beta: Fraction = Fraction(3, 10)
    seed: int = 0

    def __post_init__(self):
        self.strategy = Strategy(self.strategy)
        self.abstraction = Abstraction(self.abstraction)
        self.alpha = as_fraction(self.alpha)
        self.beta = as_fraction(self.beta)
        if self.max_length < 1:
            raise ValueError(f"max_length must be at least 1, got {self.max_length}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be at least 1, got {self.restarts}")
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be non-negative")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass
class BuildStats:
    runs: int = 0
    steps: int = 0
    dead_ends: int = 0
    states: int = 0
    transitions: int = 0
    build_time: float = 0.0

    def to_dict(self, include_timings=False):
        data = {
            "runs": self.runs,
            "steps": self.steps,
            "dead_ends": self.dead_ends,
            "states": self.states,
            "transitions": self.transitions,
        }
        if include_timings:
            data["build_time"] = round(self.build_time, 4)
        return data


class ModelBuilder:
    """
    Model construction: `restarts` depth-first walks of at most `max_length`
    events each, sharing one engine session (coverage and fire counts carry
    over between walks) and one Fsm.
    """

    def __init__(self, spec, rel, config):
        self.spec = spec
        self.rel = rel
        self.config = config
        self.stats = BuildStats()

    def _abstract(self, state):
        return abstract_state(state, self.spec, self.config.abstraction)

    def build(self):
        cfg = self.config
        started = time.perf_counter()
        rng = make_rng(cfg.seed, SELECTION_STREAM)
        session = init_session(self.spec, derive_seed(cfg.seed, CONSTRUCTION_STREAM))
        fsm = Fsm(self._abstract(session.state))
        logging.info(f"Building model of {self.spec.name}: d={cfg.max_length}, r={cfg.restarts}, "
                     f"{cfg.strategy.value} selection, {cfg.abstraction.value} abstraction")

        for run in range(cfg.restarts):
            if run:
                session.reset()
            current = fsm.s0
            prev = None
            self.stats.runs += 1
            for _ in range(cfg.max_length):
                available = session.available_events()
                if not available:
                    self.stats.dead_ends += 1
                    logging.info(f"Run {run} stopped early: no available events after {len(session.trace)} steps")
                    break
                event = select_event(cfg.strategy, available, prev, self.rel, session.fired_count,
                                     cfg.alpha, cfg.beta, rng)
                successor = self._abstract(session.fire(event))
                fsm.add_transition(current, event, successor)
                logging.debug(f"Run {run}: {current.label} --{event}--> {successor.label}")
                current, prev = successor, event
                self.stats.steps += 1

        fsm.freeze()
        self.stats.states = fsm.num_states
        self.stats.transitions = fsm.num_transitions
        self.stats.build_time = time.perf_counter() - started
        logging.info(f"Model of {self.spec.name}: {fsm.num_states} states, {fsm.num_transitions} transitions")
        return fsm, session


def build_model(spec, rel, config):
    """Return (Fsm, EngineSession); the session holds construction coverage."""
    return ModelBuilder(spec, rel, config).build()
