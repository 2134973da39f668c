from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from analysis.dependency import analyze
from appspec.parser import parse
from engine.session import init_session
from model.abstraction import AbstractState, FNV_OFFSET, abstract_state, fnv1a_64, serialize
from model.builder import BuildConfig, build_model, ModelBuilder
from model.fsm import Fsm
from model.selection import select_event, weight

SELF_DISABLING = "app Once\nevent E { disable(E); }\n"

TENTH = Fraction(1, 10)


def test_fnv1a_known_values():
    assert fnv1a_64(b"") == FNV_OFFSET
    assert fnv1a_64(b"a") == 0xAF63DC4C8601EC8C


def test_serialize_layout():
    data = serialize((("x", "int", 1), ("b", "bool", True)), ("E",))
    assert data == (b"x\x00\x01" + (1).to_bytes(8, "little", signed=True)
                    + b"b\x00\x02" + (1).to_bytes(8, "little", signed=True)
                    + b"\xffE\x00")
    assert serialize((("x", "int", -1),), None) == b"x\x00\x01" + b"\xff" * 8


def test_coarse_ignores_implicit_values_and_enabled(running_example):
    session = init_session(running_example)
    s0 = abstract_state(session.state, running_example, "coarse")
    for event in ("A", "B", "C"):
        session.fire(event)
    assert abstract_state(session.state, running_example, "coarse") == s0
    assert abstract_state(session.state, running_example, "fine") != abstract_state(
        session.initial, running_example, "fine")


def test_fine_sees_the_enabled_set():
    app = parse(SELF_DISABLING)
    session = init_session(app)
    before = abstract_state(session.state, app, "fine")
    session.fire("E")
    assert abstract_state(session.state, app, "fine") != before
    assert abstract_state(session.state, app, "coarse") == abstract_state(session.initial, app, "coarse")


def test_abstract_state_keeps_tuple_on_request(two_switches):
    state = init_session(two_switches).state
    kept = abstract_state(state, two_switches, "coarse", keep_tuple=True)
    assert kept.abstracted == ((("left", "bool", False), ("right", "bool", False)), None)
    assert kept == abstract_state(state, two_switches, "coarse")
    assert len(kept.label) == 16


def test_weighted_selection_walkthrough(running_example):
    rel = analyze(running_example)
    session = init_session(running_example)
    alpha, beta = Fraction(7, 10), Fraction(3, 10)

    def weights(prev):
        return {e: weight(e, prev, rel, session.fired_count, alpha, beta)
                for e in sorted(session.available_events())}

    assert weights(None) == {"A": 3 * TENTH, "B": 3 * TENTH, "C": 3 * TENTH}
    session.fire("A")
    assert weights("A") == {"A": 7 * TENTH / 2, "B": 7 * TENTH, "C": 7 * TENTH}
    session.fire("B")
    assert weights("B") == {"A": 7 * TENTH / 2, "B": 7 * TENTH / 2, "C": 7 * TENTH}
    for seed in range(5):
        chosen = select_event("weighted", session.available_events(), "B", rel, session.fired_count,
                              alpha, beta, np.random.default_rng(seed))
        assert chosen == "C"
    session.fire("C")
    assert weights("C") == {"A": 7 * TENTH / 2, "B": 7 * TENTH / 2, "C": 7 * TENTH / 2, "Submit": 7 * TENTH}


def test_random_selection_is_uniform_over_sorted_candidates(running_example):
    rel = analyze(running_example)
    fired = {e: 0 for e in running_example.event_names}
    picks = {select_event("random", {"C", "A", "B"}, None, rel, fired, 0, 0, np.random.default_rng(seed))
             for seed in range(50)}
    assert picks == {"A", "B", "C"}
    with pytest.raises(ValueError):
        select_event("random", set(), None, rel, fired, 0, 0, np.random.default_rng(0))


def test_build_config_validation():
    assert BuildConfig(alpha=0.7).alpha == Fraction(7, 10)
    assert BuildConfig(strategy="weighted").strategy.value == "weighted"
    for bad in ({"max_length": 0}, {"restarts": 0}, {"alpha": -1}, {"beta": -0.5}, {"seed": -1},
                {"seed": 2 ** 64}):
        with pytest.raises(ValueError):
            BuildConfig(**bad)
    with pytest.raises(ValueError):
        BuildConfig(abstraction="medium")


def test_coarse_collapse(running_example):
    rel = analyze(running_example)
    fsm, _ = build_model(running_example, rel, BuildConfig(max_length=20, restarts=2, abstraction="coarse"))
    assert fsm.num_states == 1
    assert fsm.num_transitions <= 4
    assert all(source == target == fsm.s0 for source, _, target in fsm.transitions)


def test_weighted_coarse_model_has_every_label(running_example):
    rel = analyze(running_example)
    config = BuildConfig(max_length=20, restarts=2, abstraction="coarse", strategy="weighted")
    fsm, session = build_model(running_example, rel, config)
    assert fsm.num_states == 1
    assert fsm.events == {"A", "B", "C", "Submit"}
    assert fsm.supp(fsm.s0) == [(e, fsm.s0) for e in ("A", "B", "C", "Submit")]
    assert session.coverage().per_event["Submit"].ratio == 1.0


def test_fine_model_splits_states(running_example):
    rel = analyze(running_example)
    fsm, _ = build_model(running_example, rel, BuildConfig(max_length=20, restarts=2, abstraction="fine"))
    assert fsm.num_states > 1


def test_build_is_deterministic(two_switches):
    rel = analyze(two_switches)
    config = BuildConfig(max_length=30, restarts=3, abstraction="fine", seed=42)
    first, _ = build_model(two_switches, rel, config)
    second, _ = build_model(two_switches, rel, config)
    assert first.transitions == second.transitions
    assert first.s0 == second.s0


def test_dead_end_runs_stop_early():
    app = parse(SELF_DISABLING)
    builder = ModelBuilder(app, analyze(app), BuildConfig(max_length=10, restarts=2, abstraction="fine"))
    fsm, session = builder.build()
    assert builder.stats.runs == 2
    assert builder.stats.steps == 2
    assert builder.stats.dead_ends == 2
    assert fsm.num_states == 2
    assert session.fired_count["E"] == 2
    assert builder.stats.to_dict() == {"runs": 2, "steps": 2, "dead_ends": 2, "states": 2, "transitions": 1}
    assert "build_time" in builder.stats.to_dict(include_timings=True)


def test_construction_fault_keeps_state(coin):
    rel = analyze(coin)
    fsm, session = build_model(coin, rel, BuildConfig(max_length=40, restarts=2, seed=1))
    assert sum(session.fired_count.values()) == 80
    assert fsm.num_transitions <= 80


def test_fsm_basics():
    s0, s1, s2 = AbstractState(0), AbstractState(1), AbstractState(2)
    fsm = Fsm.from_transitions(s0, [(s0, "b", s1), (s0, "a", s1), (s0, "a", s2), (s0, "a", s1), (s1, "c", s0)])
    assert fsm.num_states == 3
    assert fsm.num_transitions == 4
    assert fsm.supp(s0) == [("a", s1), ("a", s2), ("b", s1)]
    assert fsm.successors(s0, "a") == [s1, s2]
    assert fsm.supp(AbstractState(99)) == []
    assert fsm.is_run(["a", "c", "b"])
    assert not fsm.is_run(["c"])
    assert fsm.is_run([])
    fsm.freeze()
    with pytest.raises(nx.NetworkXError):
        fsm.add_transition(s2, "d", s0)
