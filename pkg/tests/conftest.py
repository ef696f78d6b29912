import pytest
from hypothesis import strategies as st

from toeplitz.core import ToeplitzSpec, new_spec

ACCEPTANCE_LINES: list[str] = []


@st.composite
def specs(draw, min_n=2, max_n=12, allow_edgeless=False):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 1:
        return new_spec(1, [], allow_edgeless=True)
    offsets = draw(st.lists(st.integers(1, n - 1), unique=True, min_size=0 if allow_edgeless else 1))
    return new_spec(n, offsets, allow_edgeless=allow_edgeless)


@st.composite
def arithmetic_specs(draw, min_n=2, max_n=12):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    t = draw(st.integers(min_value=1, max_value=n - 1))
    k = draw(st.integers(min_value=1, max_value=(n - 1) // t))
    return ToeplitzSpec(n, tuple(t * i for i in range(1, k + 1)))


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
