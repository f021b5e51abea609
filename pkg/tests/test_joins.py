from __future__ import annotations

import pytest
from hypothesis import given, settings

from fjoin import (
    ALL_SPECS,
    DerivedKind,
    GraphError,
    JoinMode,
    OperationSpec,
    VertexTag,
    degrees,
    derive,
    f_join,
    generate,
    join,
)

from conftest import graphs


def test_all_specs_order():
    assert [str(spec) for spec in ALL_SPECS] == [
        "S-vertex",
        "S-edge",
        "R-vertex",
        "R-edge",
        "Q-vertex",
        "Q-edge",
        "T-vertex",
        "T-edge",
    ]


def test_mode_parse():
    assert JoinMode.parse("VERTEX") is JoinMode.VERTEX
    assert JoinMode.parse("edge") is JoinMode.EDGE
    with pytest.raises(GraphError, match="unknown join mode"):
        JoinMode.parse("both")


def test_join_of_two_edges_is_complete():
    pg = join(generate("path", 2), generate("path", 2))
    assert pg.graph == generate("complete", 4)
    assert pg.tags == (VertexTag.ORIGINAL_G1,) * 2 + (VertexTag.ORIGINAL_G2,) * 2


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_degrees(g1, g2):
    pg = join(g1, g2)
    deg = degrees(pg.graph)
    d1, d2 = degrees(g1), degrees(g2)
    assert deg[: g1.n] == [d + g2.n for d in d1]
    assert deg[g1.n :] == [d + g1.n for d in d2]


@given(graphs(max_n=6), graphs(max_n=6))
def test_block_layout(g1, g2):
    spec = OperationSpec(DerivedKind.Q, JoinMode.EDGE)
    pg = f_join(spec, g1, g2)
    n1, m1 = g1.n, g1.m
    assert pg.tags == (
        (VertexTag.ORIGINAL_G1,) * n1
        + (VertexTag.INSERTED,) * m1
        + (VertexTag.ORIGINAL_G2,) * g2.n
    )
    assert pg.origin_edge == {n1 + i: e for i, e in enumerate(g1.edges)}


@pytest.mark.parametrize("spec", ALL_SPECS)
@settings(max_examples=40)
@given(graphs(max_n=6), graphs(max_n=6))
def test_composite_edge_count(spec, g1, g2):
    derived_m = derive(spec.kind, g1).graph.m
    cross = g1.n * g2.n if spec.mode is JoinMode.VERTEX else g1.m * g2.n
    assert f_join(spec, g1, g2).graph.m == derived_m + g2.m + cross


@pytest.mark.parametrize("spec", ALL_SPECS)
@settings(max_examples=40)
@given(graphs(max_n=6), graphs(max_n=6))
def test_composite_degree_contract(spec, g1, g2):
    """Every block's composite degree follows from the factor degrees alone."""
    d1 = degrees(g1)
    d2 = degrees(g2)
    deg = degrees(f_join(spec, g1, g2).graph)
    n1, m1 = g1.n, g1.m
    double = spec.kind.keeps_original_edges
    vertex_mode = spec.mode is JoinMode.VERTEX
    for v in range(n1):
        base = 2 * d1[v] if double else d1[v]
        assert deg[v] == base + (g2.n if vertex_mode else 0)
    for i, (u, v) in enumerate(g1.edges):
        base = d1[u] + d1[v] if spec.kind.links_inserted else 2
        assert deg[n1 + i] == base + (0 if vertex_mode else g2.n)
    for w in range(g2.n):
        assert deg[n1 + m1 + w] == d2[w] + (n1 if vertex_mode else m1)
