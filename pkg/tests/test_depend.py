from collections import deque

import pytest

from analysis.dependency import analyze, handler_facts
from analysis.equivalence import equivalent, normal_form
from appspec.parser import parse, parse_file
from engine.session import init_session

from conftest import CHECKBOXES10, RUNNING_EXAMPLE, TWO_SWITCHES

CHAIN = """
app Chain
var x: int = 0;
var y: int = 0;
event E1 { x = x + 1; }
event E2 { y = x; }
event E3 { if (y > 0) { log("y"); } }
"""

BUBBLE = """
app Bubble
var v: int = 0;
var w: int = 0;
event a { w = w + 1; }
event b { v = 1; }
event x { if (v == 1) { log("x"); } }
"""


def test_handler_facts(running_example):
    facts = handler_facts(running_example)
    assert facts.writes["A"] == {"checkedA", "count"}
    assert facts.reads["A"] == {"checkedA", "count"}
    assert facts.ctrlreads["A"] == {"checkedA", "count"}
    assert facts.regs["A"] == {"Submit"}
    assert facts.writes["Submit"] == frozenset()
    assert facts.regs["Submit"] == frozenset()


def test_running_example_dependencies(running_example):
    rel = analyze(running_example)
    assert rel.depends("A", "Submit")
    assert rel.depends("A", "B")
    assert rel.depends("B", "A")
    assert not rel.depends("Submit", "A")
    assert all(rel.depends(e, e) for e in running_example.event_names)
    assert rel.indep == frozenset()


def test_independent_switches(two_switches):
    rel = analyze(two_switches)
    assert rel.independent("L", "R")
    assert rel.independent("R", "L")
    assert rel.depends("L", "Probe")
    assert not rel.depends("Probe", "L")
    assert not rel.independent("L", "Probe")
    assert rel.indep == {("L", "R"), ("R", "L")}


def test_coin_dependencies(coin):
    rel = analyze(coin)
    assert rel.depends("Flip", "Odds")
    assert not rel.depends("Odds", "Flip")
    assert rel.independent("Flip", "Grow")
    assert rel.independent("Odds", "Grow")


def test_flow_is_transitive():
    rel = analyze(parse(CHAIN))
    assert ("E1", "E3") not in rel.rd
    assert ("E1", "E3") not in rel.rc
    assert rel.depends("E1", "E3")
    assert not rel.depends("E3", "E1")


def test_edge_lines(two_switches):
    rel = analyze(two_switches)
    assert rel.edge_lines() == ["L -> Probe", "R -> Probe"]
    assert rel.edge_lines(reflexive=True) == ["L -> L", "L -> Probe", "Probe -> Probe", "R -> Probe", "R -> R"]


def test_equivalence_examples(running_example, two_switches):
    assert not equivalent(analyze(running_example), ("A", "B"), ("B", "A"))
    rel = analyze(two_switches)
    assert equivalent(rel, ("L", "R"), ("R", "L"))
    assert equivalent(rel, ("Probe", "L", "R"), ("Probe", "R", "L"))
    assert not equivalent(rel, ("L", "Probe"), ("Probe", "L"))
    assert not equivalent(rel, ("L", "R"), ("L", "R", "L"))
    assert equivalent(rel, (), ())


def test_normal_form_is_not_a_bubble_fixpoint():
    rel = analyze(parse(BUBBLE))
    assert rel.depends("b", "x")
    assert rel.independent("a", "b") and rel.independent("a", "x")
    assert normal_form(rel, ("b", "x", "a")) == ("a", "b", "x")
    assert equivalent(rel, ("b", "x", "a"), ("a", "b", "x"))


def _reachable_states(spec, depth):
    session = init_session(spec)
    seen = {session.initial}
    frontier = deque([(session.initial, 0)])
    while frontier:
        state, level = frontier.popleft()
        if level == depth:
            continue
        for event in sorted(state.enabled):
            session.state = state
            successor = session.fire(event)
            if successor not in seen:
                seen.add(successor)
                frontier.append((successor, level + 1))
    return seen


def _fire_pair(spec, state, first, second):
    session = init_session(spec)
    session.state = state
    session.fire(first)
    session.fire(second)
    return session.state, session.covered


@pytest.mark.parametrize("path", [RUNNING_EXAMPLE, CHECKBOXES10, TWO_SWITCHES])
def test_independent_events_commute(path):
    spec = parse_file(path)
    assert not spec.uses_rand_bool()
    rel = analyze(spec)
    checked = 0
    for state in _reachable_states(spec, 4):
        for e1, e2 in sorted(rel.indep):
            if e1 in state.enabled and e2 in state.enabled:
                assert _fire_pair(spec, state, e1, e2) == _fire_pair(spec, state, e2, e1)
                checked += 1
    if rel.indep:
        assert checked > 0
