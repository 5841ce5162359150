import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from pclist.graph_core import from_adjacency_matrix

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture(params=["python", "numba"])
def backend(request):
    return request.param


@st.composite
def graphs(draw, max_n=10, directed=None, min_n=1):
    """Random simple graph via an explicit adjacency matrix."""
    n = draw(st.integers(min_n, max_n))
    if directed is None:
        directed = draw(st.booleans())
    bits = draw(st.lists(st.booleans(), min_size=n * n, max_size=n * n))
    a = np.array(bits, dtype=bool).reshape(n, n)
    if not directed:
        a = np.triu(a, 1)
        a = a | a.T
    np.fill_diagonal(a, False)
    return from_adjacency_matrix(a, directed=directed)


@st.composite
def graph_and_subset(draw, max_n=10, directed=False):
    g = draw(graphs(max_n=max_n, directed=directed))
    s = draw(st.sets(st.integers(0, g.n - 1)))
    return g, sorted(s)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
