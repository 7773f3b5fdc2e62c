import random

import pytest
from hypothesis import strategies as st

from chiy.algebra import USeries, YPoly
from chiy.genus import ChernData, chern_partitions

small_rat = st.fractions(min_value=-5, max_value=5, max_denominator=6)
ypolys = st.lists(small_rat, max_size=3).map(YPoly)


def useries(order):
    return st.lists(ypolys, min_size=order + 1, max_size=order + 1).map(lambda cs: USeries(cs, order))


@st.composite
def chern_data(draw, max_dim=4):
    d = draw(st.integers(0, max_dim))
    values = draw(st.lists(st.integers(-50, 50), min_size=len(chern_partitions(d)),
                           max_size=len(chern_partitions(d))))
    return ChernData(d, dict(zip(chern_partitions(d), values)))


@pytest.fixture
def rng():
    return random.Random(12345)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
