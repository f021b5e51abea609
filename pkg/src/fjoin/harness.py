"""Corpus verification of the closed forms, and the two-arm benchmark.

``verify_pair`` pits the closed form against a brute-force oracle (build
the composite, sum cubed degrees) for all eight operations on one operand
pair. ``verify_corpus`` does that across a deterministic corpus of family
graphs and seeded random graphs. ``bench_compare`` times the closed-form
arm against the construction arm and skips construction when the composite
would be infeasibly large.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, replace
from fractions import Fraction

from .closed_form import theorem_value
from .graph import FAMILIES, Graph, GraphError, generate, random_graph
from .indices import f_index, invariants
from .joins import ALL_SPECS, f_join

_FAMILY_FLOORS = {"path": 1, "cycle": 3, "complete": 1, "star": 2}

# Construction beyond this many composite edges is treated as infeasible for
# the benchmark; well under memory limits but already far slower than the
# closed form.
DEFAULT_EDGE_BUDGET = 3_000_000


@dataclass(frozen=True)
class CorpusConfig:
    """What the verification corpus contains.

    Family ranges are inclusive ``(low, high)`` vertex counts. Random
    operands are drawn with ``n`` up to ``max_random_n`` and ``m`` up to
    ``min(max_random_m, n * (n - 1) // 2)``, all derived from ``seed``.
    """

    path_sizes: tuple[int, int] = (1, 8)
    cycle_sizes: tuple[int, int] = (3, 8)
    complete_sizes: tuple[int, int] = (1, 5)
    star_sizes: tuple[int, int] = (2, 6)
    random_trials: int = 200
    max_random_n: int = 12
    max_random_m: int = 66
    seed: int = 42

    def __post_init__(self):
        for family, (low, high) in self.family_ranges().items():
            if low > high:
                raise GraphError(f"empty {family} range ({low}, {high})")
            if low < _FAMILY_FLOORS[family]:
                raise GraphError(
                    f"{family} range starts at {low}, below the family minimum "
                    f"{_FAMILY_FLOORS[family]}"
                )
        if self.random_trials < 0:
            raise GraphError(f"random_trials must be nonnegative, got {self.random_trials}")
        if self.max_random_n < 1:
            raise GraphError(f"max_random_n must be positive, got {self.max_random_n}")
        if self.max_random_m < 0:
            raise GraphError(f"max_random_m must be nonnegative, got {self.max_random_m}")

    def family_ranges(self) -> dict[str, tuple[int, int]]:
        return {
            "path": self.path_sizes,
            "cycle": self.cycle_sizes,
            "complete": self.complete_sizes,
            "star": self.star_sizes,
        }

    @classmethod
    def from_dict(cls, data: dict) -> CorpusConfig:
        if not isinstance(data, dict):
            raise GraphError("corpus config must be a JSON object")
        known = {
            "path": "path_sizes",
            "cycle": "cycle_sizes",
            "complete": "complete_sizes",
            "star": "star_sizes",
            "random_trials": "random_trials",
            "max_random_n": "max_random_n",
            "max_random_m": "max_random_m",
            "seed": "seed",
        }
        kwargs = {}
        for key, value in data.items():
            if key not in known:
                raise GraphError(f"unknown corpus config key {key!r}")
            if key in FAMILIES:
                low, high = value
                kwargs[known[key]] = (int(low), int(high))
            else:
                kwargs[known[key]] = int(value)
        return cls(**kwargs)

    @classmethod
    def from_json(cls, text: str) -> CorpusConfig:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"corpus config is not valid JSON: {exc}") from None
        return cls.from_dict(data)

    def with_seed(self, seed: int) -> CorpusConfig:
        return replace(self, seed=seed)


@dataclass(frozen=True)
class PairRecord:
    """One operation on one operand pair, both routes."""

    g1: str
    g2: str
    kind: str
    mode: str
    closed_form: int
    oracle: int

    @property
    def match(self) -> bool:
        return self.closed_form == self.oracle

    def as_dict(self) -> dict:
        return {
            "g1": self.g1,
            "g2": self.g2,
            "kind": self.kind,
            "mode": self.mode,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "match": self.match,
        }


@dataclass(frozen=True)
class VerificationReport:
    records: tuple[PairRecord, ...]

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def mismatches(self) -> tuple[PairRecord, ...]:
        return tuple(record for record in self.records if not record.match)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "records": [record.as_dict() for record in self.records],
            "summary": {"total": self.total, "mismatches": len(self.mismatches)},
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def verify_pair(g1: Graph, g2: Graph, label1: str = "g1", label2: str = "g2") -> VerificationReport:
    """Check all eight operations on one ordered operand pair.

    The closed form sees only the factor invariants; the oracle builds each
    composite and sums cubed degrees. The two routes share no code beyond
    the operand graphs themselves.
    """
    inv1 = invariants(g1)
    inv2 = invariants(g2)
    records = []
    for spec in ALL_SPECS:
        closed = theorem_value(spec, inv1, inv2)
        oracle = f_index(f_join(spec, g1, g2).graph)
        records.append(
            PairRecord(
                g1=label1,
                g2=label2,
                kind=spec.kind.value,
                mode=spec.mode.value,
                closed_form=closed,
                oracle=oracle,
            )
        )
    return VerificationReport(tuple(records))


def family_corpus(config: CorpusConfig | None = None) -> list[tuple[str, Graph]]:
    """The deterministic family part of the corpus, labeled ``family-n``."""
    config = config or CorpusConfig()
    out = []
    for family, (low, high) in config.family_ranges().items():
        for size in range(low, high + 1):
            out.append((f"{family}-{size}", generate(family, size)))
    return out


def _random_operand(rng: random.Random, config: CorpusConfig) -> Graph:
    n = rng.randint(1, config.max_random_n)
    m = rng.randint(0, min(config.max_random_m, n * (n - 1) // 2))
    return random_graph(n, m, rng.randrange(2**63))


def verify_corpus(config: CorpusConfig | None = None) -> VerificationReport:
    """Run :func:`verify_pair` over every ordered family pair plus the
    seeded random trials; deterministic for a fixed config."""
    config = config or CorpusConfig()
    corpus = family_corpus(config)
    records: list[PairRecord] = []
    for label1, g1 in corpus:
        for label2, g2 in corpus:
            records.extend(verify_pair(g1, g2, label1, label2).records)
    rng = random.Random(config.seed)
    for trial in range(config.random_trials):
        g1 = _random_operand(rng, config)
        g2 = _random_operand(rng, config)
        labels = (f"random-{trial:03d}-a", f"random-{trial:03d}-b")
        records.extend(verify_pair(g1, g2, *labels).records)
    return VerificationReport(tuple(records))


BENCH_CSV_HEADER = "n1,n2,m1,m2,closed_ns,construct_ns,feasible,equal"


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark run; construction fields are None when skipped."""

    n1: int
    n2: int
    m1: int
    m2: int
    closed_ns: int
    construct_ns: int | None
    feasible: bool
    equal: bool | None

    def csv_row(self) -> str:
        construct = "" if self.construct_ns is None else str(self.construct_ns)
        equal = "" if self.equal is None else str(self.equal).lower()
        return (
            f"{self.n1},{self.n2},{self.m1},{self.m2},"
            f"{self.closed_ns},{construct},{str(self.feasible).lower()},{equal}"
        )


def _worst_composite_edges(n1: int, m1: int, m1_first_zagreb: int, n2: int, m2: int) -> int:
    # The largest composite uses the total graph and the bigger cross block.
    derived = 3 * m1 + (m1_first_zagreb - 2 * m1) // 2
    cross = max(n1, m1) * n2
    return derived + m2 + cross


def bench_compare(
    n1: int,
    n2: int,
    density,
    seed: int,
    edge_budget: int = DEFAULT_EDGE_BUDGET,
) -> BenchRecord:
    """Time the closed-form arm, and the construction arm when feasible.

    ``density`` scales each factor's possible edge count; pass a string or
    :class:`~fractions.Fraction` for exact ratios. Feasibility is judged
    before construction from the worst composite edge count; an unexpected
    ``MemoryError`` during construction also downgrades the run to
    infeasible rather than crashing.
    """
    density = Fraction(density)
    if not 0 <= density <= 1:
        raise GraphError(f"density must be in [0, 1], got {density}")
    m1 = int(density * (n1 * (n1 - 1) // 2))
    m2 = int(density * (n2 * (n2 - 1) // 2))
    rng = random.Random(seed)
    g1 = random_graph(n1, m1, rng.randrange(2**63))
    g2 = random_graph(n2, m2, rng.randrange(2**63))

    start = time.perf_counter_ns()
    inv1 = invariants(g1)
    inv2 = invariants(g2)
    closed = {spec: theorem_value(spec, inv1, inv2) for spec in ALL_SPECS}
    closed_ns = time.perf_counter_ns() - start

    worst = _worst_composite_edges(g1.n, g1.m, inv1.M1, g2.n, g2.m)
    if worst > edge_budget:
        return BenchRecord(n1, n2, m1, m2, closed_ns, None, False, None)
    try:
        start = time.perf_counter_ns()
        equal = True
        for spec in ALL_SPECS:
            oracle = f_index(f_join(spec, g1, g2).graph)
            equal = equal and oracle == closed[spec]
        construct_ns = time.perf_counter_ns() - start
    except MemoryError:
        return BenchRecord(n1, n2, m1, m2, closed_ns, None, False, None)
    return BenchRecord(n1, n2, m1, m2, closed_ns, construct_ns, True, equal)
