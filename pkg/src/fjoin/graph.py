"""Simple undirected graphs: construction, named families, text I/O, sampling.

Vertices are dense 0-based integers. Edges are stored canonically as sorted
``(u, v)`` pairs with ``u < v``, and a graph is immutable once built, so two
graphs with the same vertex count and edge set compare equal structurally.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Sequence

FAMILIES = ("path", "cycle", "complete", "star")

# Enumerating every candidate pair is exactly uniform but costs O(n^2) memory;
# past this many pairs random_graph switches to rejection sampling.
_SAMPLE_PAIR_LIMIT = 1_000_000


class GraphError(ValueError):
    """A graph construction or domain precondition was violated."""


class ParseError(GraphError):
    """Malformed edge-list text.

    ``line`` is the 1-based line number the parser choked on.
    """

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices ``0..n-1``.

    ``edges`` must already be canonical: each pair sorted, no loops, no
    duplicates, the whole tuple in ascending order. Use :meth:`from_edges`
    to build from arbitrary pair iterables.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        previous = None
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphError(f"edge ({u}, {v}) not in (min, max) order")
            if not 0 <= u < self.n or not v < self.n:
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            if previous is not None and previous > (u, v):
                raise GraphError("edge tuple is not sorted")
            previous = (u, v)
        # Handshake identity, recomputed independently of the checks above.
        assert sum(degrees(self)) == 2 * len(self.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from edge pairs in any order and orientation."""
        canonical = sorted((u, v) if u <= v else (v, u) for u, v in edges)
        return cls(n, tuple(canonical))


def degrees(graph: Graph) -> list[int]:
    """Per-vertex degree list, indexed by vertex id."""
    out = [0] * graph.n
    for vertex, count in Counter(chain.from_iterable(graph.edges)).items():
        out[vertex] = count
    return out


def generate(family: str, n: int) -> Graph:
    """Build the ``n``-vertex member of a named family.

    path needs n >= 1, cycle n >= 3 (shorter cycles would need loops or
    doubled edges), complete n >= 1, star n >= 2 with vertex 0 as the hub.
    """
    if family == "path":
        if n < 1:
            raise GraphError(f"path needs n >= 1, got {n}")
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        edges = [(i, i + 1) for i in range(n - 1)]
        edges.append((0, n - 1))
    elif family == "complete":
        if n < 1:
            raise GraphError(f"complete needs n >= 1, got {n}")
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif family == "star":
        if n < 2:
            raise GraphError(f"star needs n >= 2, got {n}")
        edges = [(0, leaf) for leaf in range(1, n)]
    else:
        raise GraphError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return Graph.from_edges(n, edges)


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Sample a uniform simple graph with exactly ``m`` edges.

    Deterministic for a fixed ``(n, m, seed)`` triple regardless of platform.
    """
    if n < 1:
        raise GraphError(f"random graph needs n >= 1, got {n}")
    total = n * (n - 1) // 2
    if not 0 <= m <= total:
        raise GraphError(f"m={m} outside [0, {total}] for n={n}")
    rng = random.Random(seed)
    if total <= _SAMPLE_PAIR_LIMIT:
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        chosen: Iterable[tuple[int, int]] = rng.sample(pairs, m)
    else:
        picked: set[tuple[int, int]] = set()
        while len(picked) < m:
            u = rng.randrange(n)
            v = rng.randrange(n)
            if u != v:
                picked.add((u, v) if u < v else (v, u))
        chosen = picked
    return Graph.from_edges(n, chosen)


def relabel(graph: Graph, permutation: Sequence[int]) -> Graph:
    """Rename vertex ``v`` to ``permutation[v]``; the result is isomorphic."""
    if sorted(permutation) != list(range(graph.n)):
        raise GraphError("relabel needs a permutation of 0..n-1")
    return Graph.from_edges(
        graph.n, ((permutation[u], permutation[v]) for u, v in graph.edges)
    )


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse the edge-list text format into a graph.

    The first data line is ``n m``; the next ``m`` data lines each hold one
    edge ``u v`` with 0-based ids. Lines starting with ``#`` are comments,
    blank lines are skipped, and both LF and CRLF endings are accepted.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if len(parts) != 2:
                raise ValueError
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(lineno, f"negative count in header {line!r}")
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(lineno, f"more than the declared {m} edges")
        if not 0 <= a < n or not 0 <= b < n:
            raise ParseError(lineno, f"vertex id out of range for n={n}: {line!r}")
        if a == b:
            raise ParseError(lineno, f"self-loop at vertex {a}")
        edge = (a, b) if a < b else (b, a)
        if edge in seen:
            raise ParseError(lineno, f"duplicate edge {edge}")
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise ParseError(max(lineno, 1), "missing 'n m' header line")
    if len(edges) != header[1]:
        raise ParseError(lineno + 1, f"declared {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def render_edge_list(graph: Graph) -> str:
    """Serialize a graph to the edge-list text format (LF line endings)."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
