import logging

import pytest

from hyperchroma.core import parse_edges
from hyperchroma.generators import field_plane, h3_prime_literal, truncated_plane, twisted_plane


def pytest_configure(config):
    logging.getLogger("hyperchroma").setLevel(logging.ERROR)


@pytest.fixture(scope="session")
def h3p():
    return h3_prime_literal()


@pytest.fixture(scope="session")
def a3hat():
    return truncated_plane(3)[0]


@pytest.fixture(scope="session")
def a2hat():
    return truncated_plane(2)[0]


@pytest.fixture(scope="session")
def a3():
    return field_plane(3)[0]


@pytest.fixture(scope="session")
def a2():
    return field_plane(2)[0]


@pytest.fixture(scope="session")
def t4():
    return twisted_plane(4)[0]


@pytest.fixture
def edges():
    return parse_edges


def pytest_terminal_summary(terminalreporter):
    acc = __import__("sys").modules.get("test_acceptance")
    if acc is not None and acc.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acc.RESULTS:
            terminalreporter.write_line(line)
