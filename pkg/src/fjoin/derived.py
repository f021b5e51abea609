"""Edge-insertion derived graphs with per-vertex provenance.

All four constructions start the same way: every edge (u, v) of the source
gets a new inserted vertex w joined to u and v. They differ in whether the
original edges survive and whether inserted vertices of edges sharing an
endpoint are linked to each other.

Vertex ids in the result are laid out in blocks: source vertices keep their
ids in ``[0, n)``, inserted vertices occupy ``[n, n + m)`` in the canonical
order of the edges they subdivide.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, GraphError


class DerivedKind(str, Enum):
    """The four derived constructions."""

    S = "S"  # subdivision: inserted vertices only
    R = "R"  # subdivision plus the original edges
    Q = "Q"  # subdivision plus links between inserted vertices of touching edges
    T = "T"  # total graph: Q plus the original edges

    @classmethod
    def parse(cls, text: str) -> DerivedKind:
        try:
            return cls(text.upper())
        except ValueError:
            raise GraphError(f"unknown derived kind {text!r}; expected S, R, Q or T") from None

    @property
    def keeps_original_edges(self) -> bool:
        return self in (DerivedKind.R, DerivedKind.T)

    @property
    def links_inserted(self) -> bool:
        return self in (DerivedKind.Q, DerivedKind.T)


class VertexTag(str, Enum):
    """Where a composite vertex came from."""

    ORIGINAL_G1 = "original_g1"
    INSERTED = "inserted"
    ORIGINAL_G2 = "original_g2"


@dataclass(frozen=True)
class ProvenancedGraph:
    """A graph whose vertices carry their provenance.

    ``tags[v]`` says which block vertex ``v`` belongs to; ``origin_edge``
    maps each inserted vertex to the source edge it subdivides.
    """

    graph: Graph
    tags: tuple[VertexTag, ...]
    origin_edge: dict[int, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.tags) != self.graph.n:
            raise GraphError(
                f"{len(self.tags)} tags for {self.graph.n} vertices"
            )
        inserted = [v for v, tag in enumerate(self.tags) if tag is VertexTag.INSERTED]
        if sorted(self.origin_edge) != inserted:
            raise GraphError("origin_edge keys must be exactly the inserted vertices")

    def ids(self, tag: VertexTag) -> tuple[int, ...]:
        """All vertex ids carrying ``tag``, ascending."""
        return tuple(v for v, t in enumerate(self.tags) if t is tag)


def derive(kind: DerivedKind, source: Graph) -> ProvenancedGraph:
    """Build the derived graph of ``kind`` over ``source``.

    Edge generation is set-backed, so the three edge groups (subdivision,
    original, inserted-inserted) cannot collide even if a future variant
    overlaps them.
    """
    n = source.n
    inserted_of = {edge: n + i for i, edge in enumerate(source.edges)}
    edges: set[tuple[int, int]] = set()
    for (u, v), w in inserted_of.items():
        edges.add((u, w))
        edges.add((v, w))
    if kind.keeps_original_edges:
        edges.update(source.edges)
    if kind.links_inserted:
        # Bucket inserted vertices by shared source endpoint; each bucket
        # contributes one clique, and edges sharing an endpoint pair up once.
        incident: list[list[int]] = [[] for _ in range(n)]
        for (u, v), w in inserted_of.items():
            incident[u].append(w)
            incident[v].append(w)
        for bucket in incident:
            for i, a in enumerate(bucket):
                for b in bucket[i + 1 :]:
                    edges.add((a, b) if a < b else (b, a))
    graph = Graph.from_edges(n + source.m, edges)
    tags = (VertexTag.ORIGINAL_G1,) * n + (VertexTag.INSERTED,) * source.m
    return ProvenancedGraph(
        graph, tags, {w: edge for edge, w in inserted_of.items()}
    )
