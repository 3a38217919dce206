import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quivertau.catalog import EX1_SOURCE, EX5_SOURCE, EX6_SOURCE, ex3_source, ex4_source
from quivertau.dsl import parse_session


@pytest.fixture(scope="session")
def ex1():
    return parse_session(EX1_SOURCE)


@pytest.fixture(scope="session")
def ex2():
    return parse_session(ex3_source(3))


@pytest.fixture(scope="session")
def ex4_n4():
    return parse_session(ex4_source(4))


@pytest.fixture(scope="session")
def ex5():
    return parse_session(EX5_SOURCE)


@pytest.fixture(scope="session")
def ex6():
    return parse_session(EX6_SOURCE)


def summands(session, name="T"):
    return [session.modules[x] for x in session.summands[name]]
