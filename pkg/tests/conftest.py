import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from protrusion_lab.graph import BoundariedGraph, Graph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def boundaried_graphs(draw, t=None, max_t=3, max_n=8):
    if t is None:
        t = draw(st.integers(1, max_t))
    g = draw(graphs(min_n=t, max_n=max(t, max_n)))
    boundary = draw(st.permutations(list(range(g.n))))[:t]
    return BoundariedGraph(g.n, g.edges, tuple(boundary))


def random_boundaried(rng: random.Random, t: int, n: int, p: float = 0.35) -> BoundariedGraph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    boundary = tuple(rng.sample(range(n), t))
    return BoundariedGraph(n, edges, boundary)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_RESULTS = {}


@pytest.fixture
def acceptance_record():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        ACCEPTANCE_RESULTS[number] = (title, ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {title} {detail}".rstrip())
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, ok, detail = ACCEPTANCE_RESULTS[number]
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
