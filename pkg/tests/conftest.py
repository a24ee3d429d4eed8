import pytest

from dichroma.digraph import build_digraph
from dichroma.expr import parse_cw

WORKED_X = "add(1,2, union( rel(2,1, add(2,1, add(1,2, union(v(v1,1),v(v2,2))))), v(v3,2)))"

# filled by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_RESULTS: dict[str, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda s: (int(s.split(".")[0].rstrip("b")), s)):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[key]:4}  {key}")


def cycle(n):
    return build_digraph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path(n):
    return build_digraph(n, [(i, i + 1) for i in range(1, n)])


def complete_bi(n):
    return build_digraph(n, [(u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v])


@pytest.fixture
def c3():
    return cycle(3)


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def worked_x():
    return parse_cw(WORKED_X)
