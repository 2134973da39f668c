import os

import pytest

from appspec.parser import parse_file

CORPUS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")

RUNNING_EXAMPLE = os.path.join(CORPUS, "running_example.eda")
CHECKBOXES10 = os.path.join(CORPUS, "checkboxes10.eda")
TWO_SWITCHES = os.path.join(CORPUS, "two_switches.eda")
COIN = os.path.join(CORPUS, "coin.eda")

CORPUS_APPS = (RUNNING_EXAMPLE, CHECKBOXES10, TWO_SWITCHES, COIN)

WITNESS = ("A", "B", "C", "Submit", "A", "B", "C")


@pytest.fixture(scope="session")
def running_example():
    return parse_file(RUNNING_EXAMPLE)


@pytest.fixture(scope="session")
def checkboxes10():
    return parse_file(CHECKBOXES10)


@pytest.fixture(scope="session")
def two_switches():
    return parse_file(TWO_SWITCHES)


@pytest.fixture(scope="session")
def coin():
    return parse_file(COIN)
