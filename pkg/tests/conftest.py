from __future__ import annotations

import pytest
from hypothesis import strategies as st

from fjoin import Graph, generate


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 1):
    """Arbitrary simple graph with min_n..max_n vertices."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    else:
        edges = []
    return Graph.from_edges(n, edges)


@pytest.fixture
def p3() -> Graph:
    return generate("path", 3)


@pytest.fixture
def p4() -> Graph:
    return generate("path", 4)
