import pytest
from hypothesis import strategies as st

from ribbons.shapes import SkewShape, normalize, subpartitions
from ribbons.tableau import HeadArray

from reference import ARRAY_SKEW, ARRAY_STRAIGHT


@st.composite
def partitions_st(draw, max_size=12, max_rows=6):
    parts = draw(st.lists(st.integers(1, max_size), max_size=max_rows))
    parts.sort(reverse=True)
    while sum(parts) > max_size:
        parts.pop(0)
    return normalize(parts)


@st.composite
def skew_shapes(draw, max_cells=12, max_outer=16):
    outer = draw(partitions_st(max_size=max_outer))
    inners = [mu for mu in subpartitions(outer) if sum(outer) - sum(mu) <= max_cells]
    return SkewShape(outer, draw(st.sampled_from(inners)))


@pytest.fixture
def straight_array():
    return HeadArray.from_text(ARRAY_STRAIGHT, 3, "bottom-up")


@pytest.fixture
def skew_array():
    return HeadArray.from_text(ARRAY_SKEW, 3, "bottom-up")


def pytest_terminal_summary(terminalreporter):
    from acceptance_log import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(LINES):
            terminalreporter.write_line(LINES[n])
