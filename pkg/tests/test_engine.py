import numpy as np
import pytest

from appspec.parser import parse
from engine.session import EventNotEnabled, init_session

from conftest import WITNESS

A_SINGLE_FIRE = {(11, 5), (12, 5), (13, 9), (17, 5), (18, 5), (19, 9)}


def test_initial_page(running_example):
    session = init_session(running_example, seed=0)
    assert session.available_events() == {"A", "B", "C"}
    assert session.state.as_dict() == {"count": 0, "checkedA": False, "checkedB": False, "checkedC": False}
    assert session.coverage().covered_count == 0


def test_fire_checkbox(running_example):
    session = init_session(running_example)
    state = session.fire("A")
    assert state.value("count") == 1
    assert state.value("checkedA") is True
    assert "Submit" not in state.enabled
    assert session.covered == A_SINGLE_FIRE
    assert session.coverage().summary().startswith("6/22 statements covered")


def test_submit_registration(running_example):
    session = init_session(running_example)
    for event in ("A", "B", "C"):
        session.fire(event)
    assert session.available_events() == {"A", "B", "C", "Submit"}
    session.fire("A")
    assert session.available_events() == {"A", "B", "C"}
    assert session.state.value("count") == 2


def test_fire_disabled_event(running_example):
    session = init_session(running_example)
    with pytest.raises(EventNotEnabled) as info:
        session.fire("Submit")
    assert info.value.event == "Submit"
    assert session.trace == []
    assert session.fired_count["Submit"] == 0


def test_witness_covers_everything(running_example):
    session = init_session(running_example)
    for event in WITNESS:
        session.fire(event)
    report = session.coverage()
    assert (report.covered_count, report.total) == (22, 22)
    assert report.ratio == 1.0
    assert session.messages == ["submitted"]
    assert all(cov.ratio == 1.0 for cov in report.per_event.values())


def test_reset_keeps_coverage_and_counts(running_example):
    session = init_session(running_example)
    session.fire("A")
    session.reset()
    assert session.state == session.initial
    assert session.trace == []
    assert session.covered == A_SINGLE_FIRE
    assert session.fired_count["A"] == 1


def test_division_by_zero_becomes_finding(coin):
    session = init_session(coin, seed=3)
    before = session.state
    after = session.fire("Odds")
    assert after == before
    assert len(session.findings) == 1
    finding = session.findings[0]
    assert finding.event == "Odds"
    assert "division by zero" in finding.message
    assert finding.sequence == ("Odds",)
    assert session.fired_count["Odds"] == 1
    # the faulting assignment counts as covered, the log after it does not
    odds = coin.event("Odds").body
    assert odds[0].sid in session.covered
    assert odds[1].sid not in session.covered
    assert finding.statement == odds[0].sid


def test_overflow_rolls_back(coin):
    session = init_session(coin)
    for _ in range(3):
        session.fire("Grow")
    assert session.state.value("big") == 10 ** 18
    assert not session.findings
    session.fire("Grow")
    assert session.state.value("big") == 10 ** 18
    assert "integer overflow" in session.findings[0].message
    assert session.findings[0].sequence == ("Grow",) * 4


@pytest.mark.parametrize("left,right,expected", [
    (-7, 2, -3),
    (7, -2, -3),
    (-7, -2, 3),
    (7, 2, 3),
    (0, 5, 0),
])
def test_division_truncates_toward_zero(left, right, expected):
    app = parse(f"app T\nvar x: int = {left};\nvar y: int = {right};\nevent E {{ x = x / y; }}\n")
    session = init_session(app)
    assert session.fire("E").value("x") == expected


def test_min_int_division_overflows():
    app = parse("app T\nvar x: int = -9223372036854775808;\nevent E { x = x / -1; }\n")
    session = init_session(app)
    session.fire("E")
    assert "integer overflow" in session.findings[0].message


def test_short_circuit_skips_rand_bool():
    app = parse("app T\nvar b: bool = false;\nevent E { b = b && rand_bool(); }\n")
    session = init_session(app, seed=11)
    session.fire("E")
    # no draw was consumed
    assert session.rng.integers(2 ** 32) == np.random.default_rng(11).integers(2 ** 32)


def test_rand_bool_is_seeded(coin):
    def heads(seed):
        session = init_session(coin, seed)
        for _ in range(20):
            session.fire("Flip")
        return session.state.value("heads")

    assert heads(5) == heads(5)
    assert 0 <= heads(5) <= 20


def test_empty_app_ratio_is_zero():
    app = parse("app Empty\nevent E { }\n")
    session = init_session(app)
    session.fire("E")
    assert session.coverage().total == 0
    assert session.coverage().ratio == 0.0


def test_coverage_report_dict(running_example):
    session = init_session(running_example)
    session.fire("A")
    data = session.coverage().to_dict()
    assert data["covered"] == 6
    assert data["total"] == 22
    assert data["per_event"]["A"] == {"covered": 6, "total": 7, "ratio": round(6 / 7, 4)}
    assert data["statements"][0] == {"id": "11:5", "event": "A", "kind": "Assign", "covered": True}
