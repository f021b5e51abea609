"""Degree-based topological indices and the per-graph invariant bundle.

Every index is an exact integer: Python arithmetic never overflows, so no
tolerance is involved anywhere. The vertex-sum indices also have equivalent
edge-sum forms (each edge contributes one power of each endpoint degree);
the cheap form is used for the value and the other form backs a debug-mode
cross-check under ``assert``.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass

from .graph import Graph, GraphError, degrees

# Degree-power sums are only meaningful here up to the fourth power; the cap
# just guards against runaway exponents from bad call sites.
MAX_POWER = 8


@dataclass(frozen=True)
class GraphInvariants:
    """The size and index values a closed-form evaluation needs of one factor."""

    n: int
    m: int
    M1: int
    M2: int
    F: int
    HM: int
    ReZM: int
    M4: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def power_sum(graph: Graph, a: int) -> int:
    """Sum of ``deg(v) ** a`` over vertices."""
    if not 1 <= a <= MAX_POWER:
        raise GraphError(f"power must be in [1, {MAX_POWER}], got {a}")
    return sum(d**a for d in degrees(graph))


def power_sum_edge_form(graph: Graph, a: int) -> int:
    """Sum of ``deg(u) ** (a-1) + deg(v) ** (a-1)`` over edges.

    Equals :func:`power_sum` for the same ``a``: each vertex is hit once per
    incident edge, collecting deg(v) copies of ``deg(v) ** (a-1)``.
    """
    if not 1 <= a <= MAX_POWER:
        raise GraphError(f"power must be in [1, {MAX_POWER}], got {a}")
    deg = degrees(graph)
    return sum(deg[u] ** (a - 1) + deg[v] ** (a - 1) for u, v in graph.edges)


def first_zagreb(graph: Graph) -> int:
    """Sum of squared degrees."""
    value = sum(d * d for d in degrees(graph))
    assert value == power_sum_edge_form(graph, 2)
    return value


def second_zagreb(graph: Graph) -> int:
    """Sum of ``deg(u) * deg(v)`` over edges."""
    deg = degrees(graph)
    return sum(deg[u] * deg[v] for u, v in graph.edges)


def f_index(graph: Graph) -> int:
    """Sum of cubed degrees (the forgotten index)."""
    value = sum(d**3 for d in degrees(graph))
    assert value == power_sum_edge_form(graph, 3)
    return value


def hyper_zagreb(graph: Graph) -> int:
    """Sum of ``(deg(u) + deg(v)) ** 2`` over edges."""
    deg = degrees(graph)
    return sum((deg[u] + deg[v]) ** 2 for u, v in graph.edges)


def rezm(graph: Graph) -> int:
    """Sum of ``deg(u) * deg(v) * (deg(u) + deg(v))`` over edges."""
    deg = degrees(graph)
    return sum(deg[u] * deg[v] * (deg[u] + deg[v]) for u, v in graph.edges)


def general_first_zagreb(graph: Graph, a: int) -> int:
    """Sum of ``deg(v) ** a`` over vertices; a=2, 3, 4 give M1, F, M4."""
    value = power_sum(graph, a)
    if a == 4:
        assert value == power_sum_edge_form(graph, 4)
    return value


def invariants(graph: Graph) -> GraphInvariants:
    """Compute the full invariant bundle in one pass over degrees plus one
    pass over edges.

    The inner sums run over the degree distribution and the multiset of
    endpoint-degree pairs rather than raw vertices and edges; on large dense
    graphs that keeps the Python-level loop short.
    """
    deg = degrees(graph)
    m1 = f = m4 = 0
    for d, count in Counter(deg).items():
        d2 = d * d
        m1 += count * d2
        f += count * d2 * d
        m4 += count * d2 * d2
    m2 = hm = rezm_value = 0
    for (du, dv), count in Counter((deg[u], deg[v]) for u, v in graph.edges).items():
        product = du * dv
        total = du + dv
        m2 += count * product
        hm += count * total * total
        rezm_value += count * product * total
    return GraphInvariants(
        n=graph.n, m=graph.m, M1=m1, M2=m2, F=f, HM=hm, ReZM=rezm_value, M4=m4
    )
