import pytest
from hypothesis import strategies as st

from lecturehall.abacus import AbacusDiagram
from lecturehall.core import LectureHallPartition, ceil_div


@st.composite
def lecture_hall_partitions(draw, max_n=5, max_step=12):
    n = draw(st.integers(1, max_n))
    parts = [draw(st.integers(0, max_step))]
    for i in range(2, n + 1):
        lo = ceil_div(parts[-1] * i, i - 1)
        parts.append(lo + draw(st.integers(0, max_step)))
    return LectureHallPartition(n, tuple(parts))


@st.composite
def abaci(draw, max_n=5, max_row=4):
    """Defining beads drawn directly: one column per dual pair, at or above
    window 0."""
    n = draw(st.integers(1, max_n))
    beads = []
    for c in range(1, n + 1):
        col = draw(st.sampled_from([c, 2 * n + 1 - c]))
        row = draw(st.integers(-1 if col > n else 0, max_row))
        beads.append(col + 2 * n * row)
    return AbacusDiagram(n, tuple(sorted(beads)))


FIGURE1_PARTS = (0, 1, 4, 8, 14, 30)
FIGURE1_BEADS = (-2, 2, 8, 12, 16, 30)
FIGURE1_BOUNDED = (2, 4, 6, 7, 8, 9, 9, 12)


@pytest.fixture
def figure1():
    return AbacusDiagram(6, FIGURE1_BEADS)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in rep.nodeid and rep.when == "call":
                lines.append((rep.nodeid, outcome))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(lines):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
