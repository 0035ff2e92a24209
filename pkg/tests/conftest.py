import pytest
from hypothesis import strategies as st

from vcreduce.graph import DirectedGraph, UndirectedGraph


@pytest.fixture
def cycle3():
    return DirectedGraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def wcycle3():
    return DirectedGraph(3, [(0, 1), (1, 2), (2, 0)], [5, 1, 2])


@pytest.fixture
def single_arc():
    return DirectedGraph(2, [(0, 1)])


@pytest.fixture
def triangle():
    return UndirectedGraph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def square():
    return UndirectedGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@st.composite
def digraphs(draw, min_n=1, max_n=7, wmax=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    weights = draw(st.lists(st.integers(1, wmax), min_size=n, max_size=n))
    return DirectedGraph(n, [a for a, k in zip(pairs, keep) if k], weights)


@st.composite
def graphs_undirected(draw, min_n=1, max_n=7, wmax=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    weights = draw(st.lists(st.integers(1, wmax), min_size=n, max_size=n))
    return UndirectedGraph(n, [e for e, k in zip(pairs, keep) if k], weights)


# One PASS/FAIL line per acceptance criterion in the terminal summary.
_acceptance: list[tuple[str, str, str]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__.endswith("test_acceptance") and report.when == "call":
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        detail = dict(item.user_properties).get("detail", "")
        _acceptance.append(("PASS" if report.passed else "FAIL", doc, detail))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, doc, detail in _acceptance:
        terminalreporter.write_line(f"{status}  {doc}" + (f"  [{detail}]" if detail else ""))
