"""Join composites: the plain join and the eight derived-graph variants.

A plain join connects every vertex of one graph to every vertex of the
other. The derived variants first replace the left factor by one of its
edge-insertion derived graphs and then attach the right factor completely
to either the surviving source vertices (vertex mode) or the inserted
vertices (edge mode).

Composite vertex ids follow the block layout of :mod:`fjoin.derived` with
the right factor appended: left source vertices in ``[0, n1)``, inserted
vertices in ``[n1, n1 + m1)``, right vertices in ``[n1 + m1, n1 + m1 + n2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .derived import DerivedKind, ProvenancedGraph, VertexTag, derive
from .graph import Graph, GraphError


class JoinMode(str, Enum):
    """Which left-factor block the right factor attaches to."""

    VERTEX = "vertex"
    EDGE = "edge"

    @classmethod
    def parse(cls, text: str) -> JoinMode:
        try:
            return cls(text.lower())
        except ValueError:
            raise GraphError(
                f"unknown join mode {text!r}; expected vertex or edge"
            ) from None


@dataclass(frozen=True)
class OperationSpec:
    """One composite operation: a derived kind plus a join mode."""

    kind: DerivedKind
    mode: JoinMode

    def __str__(self) -> str:
        return f"{self.kind.value}-{self.mode.value}"


ALL_SPECS: tuple[OperationSpec, ...] = tuple(
    OperationSpec(kind, mode) for kind in DerivedKind for mode in JoinMode
)


def join(g1: Graph, g2: Graph) -> ProvenancedGraph:
    """Plain join: both graphs side by side plus all cross edges."""
    offset = g1.n
    edges = list(g1.edges)
    edges.extend((u + offset, v + offset) for u, v in g2.edges)
    edges.extend((u, offset + w) for u in range(g1.n) for w in range(g2.n))
    graph = Graph.from_edges(g1.n + g2.n, edges)
    tags = (VertexTag.ORIGINAL_G1,) * g1.n + (VertexTag.ORIGINAL_G2,) * g2.n
    return ProvenancedGraph(graph, tags)


def f_join(spec: OperationSpec, g1: Graph, g2: Graph) -> ProvenancedGraph:
    """Derived-graph join of ``g1`` and ``g2`` under ``spec``.

    Vertex mode adds ``n1 * n2`` cross edges from the source vertices of the
    derived left factor; edge mode adds ``m1 * n2`` cross edges from its
    inserted vertices.
    """
    base = derive(spec.kind, g1)
    offset = base.graph.n
    edges = list(base.graph.edges)
    edges.extend((u + offset, v + offset) for u, v in g2.edges)
    if spec.mode is JoinMode.VERTEX:
        anchors = base.ids(VertexTag.ORIGINAL_G1)
    else:
        anchors = base.ids(VertexTag.INSERTED)
    edges.extend((a, offset + w) for a in anchors for w in range(g2.n))
    graph = Graph.from_edges(offset + g2.n, edges)
    tags = base.tags + (VertexTag.ORIGINAL_G2,) * g2.n
    return ProvenancedGraph(graph, tags, dict(base.origin_edge))
