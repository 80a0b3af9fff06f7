import pytest

from vwmatch import VertexWeights, build_graph

ACCEPTANCE_LINES = []


@pytest.fixture
def f1():
    """S={s1,s2}, T={t1}, both s joined to t1; weights s1=5, s2=9, t1=1."""
    return build_graph(2, 1, [(0, 0), (1, 0)]), VertexWeights([5, 9], [1])


@pytest.fixture
def f2():
    """s1-t1, s1-t2, s2-t1; S weights 10, 8; T unweighted."""
    return build_graph(2, 2, [(0, 0), (0, 1), (1, 0)]), VertexWeights([10, 8], [0, 0])


@pytest.fixture
def f3():
    """Path v1-v2-v3-v4 with S={v1,v3}, T={v2,v4}; weights 1, 9, 9, 1."""
    return build_graph(2, 2, [(0, 0), (1, 0), (1, 1)]), VertexWeights([1, 9], [9, 1])


@pytest.fixture
def acceptance():
    def record(number, title, ok, detail="", skipped=False):
        status = "SKIP" if skipped else ("PASS" if ok else "FAIL")
        line = f"[{status}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
