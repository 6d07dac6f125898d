import os
import random
import sys

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from tensorpoly.graphio import load_fixture  # noqa: E402
from tensorpoly.stranded import random_stranded_graph  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture(scope="session")
def fig8():
    return load_fixture("fig8")


@pytest.fixture(scope="session")
def fig12():
    return load_fixture("fig12")


@st.composite
def stranded_graphs(draw, max_vertices=3, max_edges=6, flags=True, passive=True):
    seed = draw(st.integers(0, 2**32 - 1))
    n = draw(st.integers(1, max_vertices))
    n_flags = draw(st.sampled_from([0, 0, 2, 4])) if flags else 0
    frac = draw(st.sampled_from([0.0, 0.0, 0.3])) if passive else 0.0
    return random_stranded_graph(n, random.Random(seed), n_flags=n_flags, passive_fraction=frac,
                                 max_edges=max_edges)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
