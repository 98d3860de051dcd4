from functools import lru_cache

import pytest

from nestchroma import constructions as C
from nestchroma.enumeration import generate_graphs


@lru_cache(maxsize=None)
def graphs_on(n):
    return tuple(generate_graphs(n))


def graphs_up_to(max_n, min_n=1):
    for n in range(min_n, max_n + 1):
        yield from graphs_on(n)


@pytest.fixture
def example():
    """Six-vertex example graph (1-based labels 1..6 live at indices 0..5)."""
    return C.first_example()


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
