import time

import pytest

from altpower.graphs import build_graph, components


class GraphStore:
    """Builds each (kind, n) graph once per session and remembers how long it took."""

    def __init__(self):
        self._built = {}

    def get(self, kind, n, ceiling=None):
        key = (kind, n)
        if key not in self._built:
            start = time.perf_counter()
            g = build_graph(kind, n, ceiling)
            census = components(g)
            self._built[key] = (g, census, time.perf_counter() - start)
        return self._built[key]

    def graph(self, kind, n):
        return self.get(kind, n)[0]

    def census(self, kind, n):
        return self.get(kind, n)[1]

    def seconds(self, kind, n):
        return self.get(kind, n)[2]

    def drop(self, kind, n):
        self._built.pop((kind, n), None)


@pytest.fixture(scope="session")
def graphs():
    return GraphStore()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "skipped"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" not in getattr(rep, "nodeid", ""):
                continue
            if outcome != "skipped" and rep.when != "call":
                continue
            detail = dict(rep.user_properties).get("acceptance", "")
            lines.append((rep.nodeid.split("::")[-1], outcome.upper(), detail))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, detail in sorted(lines):
        terminalreporter.write_line(f"{outcome:7} {name}  {detail}")
