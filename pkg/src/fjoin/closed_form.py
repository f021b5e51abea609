"""Closed-form F-index values of the eight composites, plus a family audit.

:func:`theorem_value` evaluates the F-index of each composite purely from
the two factor invariant bundles, without building anything. The rest of
the module carries a fixed table of path/cycle specializations for the same
composites, recorded exactly as tabulated; :func:`audit_examples` replays
every table entry on a grid of constructed operands and reports where the
tabulated polynomial disagrees with the closed form. Disagreements are
findings to report, never entries to silently fix.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .derived import DerivedKind
from .graph import GraphError, generate
from .indices import GraphInvariants, invariants
from .joins import JoinMode, OperationSpec

_FAMILY_FLOOR = {"path": 2, "cycle": 3}


def theorem_value(
    spec: OperationSpec, inv1: GraphInvariants, inv2: GraphInvariants
) -> int:
    """Exact F-index of the ``spec`` composite of two factors.

    ``inv1`` describes the left (derived) factor, ``inv2`` the right one.
    """
    n1, m1 = inv1.n, inv1.m
    n2, m2 = inv2.n, inv2.m
    vertex = spec.mode is JoinMode.VERTEX
    if spec.kind is DerivedKind.S:
        if vertex:
            return (
                inv1.F + inv2.F + 3 * n2 * inv1.M1 + 3 * n1 * inv2.M1
                + 6 * m1 * n2**2 + 6 * m2 * n1**2
                + n1 * n2 * (n1**2 + n2**2) + 8 * m1
            )
        return (
            inv1.F + inv2.F + 3 * m1 * inv2.M1
            + 6 * m1**2 * m2 + m1 * (n2 + 2) ** 3 + n2 * m1**3
        )
    if spec.kind is DerivedKind.R:
        if vertex:
            return (
                8 * inv1.F + inv2.F + 12 * n2 * inv1.M1 + 3 * n1 * inv2.M1
                + 12 * m1 * n2**2 + 6 * m2 * n1**2
                + n1 * n2 * (n1**2 + n2**2) + 8 * m1
            )
        return (
            8 * inv1.F + inv2.F + 3 * m1 * inv2.M1
            + 6 * m1**2 * m2 + m1 * (n2 + 2) ** 3 + n2 * m1**3
        )
    if spec.kind is DerivedKind.Q:
        if vertex:
            return (
                inv1.F + inv2.F + 3 * n2 * inv1.M1 + 3 * n1 * inv2.M1
                + inv1.M4 + 3 * inv1.ReZM
                + 6 * m1 * n2**2 + 6 * m2 * n1**2 + n1 * n2 * (n1**2 + n2**2)
            )
        return (
            inv1.F + inv2.F + 3 * n2**2 * inv1.M1 + 3 * m1 * inv2.M1
            + inv1.M4 + 3 * n2 * inv1.HM + 3 * inv1.ReZM
            + m1**2 * (6 * m2 + m1 * n2) + m1 * n2**3
        )
    if vertex:
        return (
            8 * inv1.F + inv2.F + 12 * n2 * inv1.M1 + 3 * n1 * inv2.M1
            + inv1.M4 + 3 * inv1.ReZM
            + 12 * m1 * n2**2 + 6 * m2 * n1**2 + n1 * n2 * (n1**2 + n2**2)
        )
    return (
        8 * inv1.F + inv2.F + 3 * n2**2 * inv1.M1 + 3 * m1 * inv2.M1
        + inv1.M4 + 3 * n2 * inv1.HM + 3 * inv1.ReZM
        + m1**2 * (6 * m2 + m1 * n2) + m1 * n2**3
    )


@dataclass(frozen=True)
class FamilyCase:
    """One tabulated specialization: families fixed, sizes symbolic.

    ``value(n, m)`` evaluates the tabulated polynomial for a left factor of
    order ``n`` and a right factor of order ``m``. ``n_min``/``m_min`` give
    its validity range (tabulated constraint tightened to where the operand
    families exist at all).
    """

    example: int
    case: str
    spec: OperationSpec
    g1_family: str
    g2_family: str
    n_min: int
    m_min: int
    value: Callable[[int, int], int]

    @property
    def label(self) -> str:
        return f"{self.example}.{self.case}"


def _build_table() -> tuple[FamilyCase, ...]:
    S, R, Q, T = DerivedKind
    V, E = JoinMode
    # (example, case, kind, mode, g1 family, g2 family, tabulated n/m floor,
    #  polynomial in n = |g1|, m = |g2|); floors below family existence get
    # raised when the FamilyCase is built.
    rows = [
        (1, "i", S, V, "path", "path", 1, 1,
         lambda n, m: (m * n - 6) * (m**2 + n**2) + 6 * m * n * (m + n) + 24 * m * n - 10 * m - 2 * n - 36),
        (1, "ii", S, V, "path", "cycle", 1, 1,
         lambda n, m: m * n * ((m**2 + n**2) + 6 * (m + n)) - 6 * m**2 + 24 * m * n - 10 * m + 16 * n - 22),
        (1, "iii", S, V, "cycle", "cycle", 1, 1,
         lambda n, m: m * n * ((m**2 + n**2) + 6 * (m + n)) - 6 * m**2 + 24 * m * n + 8 * m + 16 * n),
        (1, "iv", S, V, "cycle", "path", 1, 1,
         lambda n, m: m * n * ((m**2 + n**2) + 6 * (m + n)) - 6 * n**2 + 24 * m * n + 8 * m - 2 * n - 14),
        (2, "i", S, E, "path", "path", 1, 1,
         lambda n, m: (n - 1) * ((m + 2) ** 3 + 6 * (m - 1) * (n - 1) + m * (n - 1) ** 2) + 12 * m * n - 4 * m - 10 * n - 10),
        (2, "ii", S, E, "path", "cycle", 1, 1,
         lambda n, m: (n - 1) * ((m + 2) ** 3 + 6 * m * (n - 1) + m * (n - 1) ** 2) + 12 * m * n - 4 * m + 8 * n - 14),
        (2, "iii", S, E, "cycle", "cycle", 1, 1,
         lambda n, m: n * ((m + 2) ** 3 + 6 * m * n + m * n**2) + 12 * m * n + 8 * m + 8 * n),
        (2, "iv", S, E, "cycle", "path", 1, 1,
         lambda n, m: n * ((m + 2) ** 3 + 6 * n * (m - 1) + m * n**2) + 12 * m * n + 8 * m - 10 * n - 14),
        (3, "i", R, V, "path", "path", 2, 2,
         lambda n, m: m * n * (m**2 + n**2 + 6 * n) + 72 * m * n - 6 * n**2 - 76 * m + 54 * n - 134),
        (3, "ii", R, V, "path", "cycle", 2, 3,
         lambda n, m: m * n * (m**2 + n**2 + 6 * n) + m**4 + 72 * m * n - 84 * m + 72 * n - 120),
        (3, "iii", R, V, "cycle", "cycle", 3, 3,
         lambda n, m: m * n * (m**2 + n**2 + 6 * n) + m**4 + 8 * n**4 + 72 * m * n + 8 * n),
        (3, "iv", R, V, "cycle", "path", 2, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * n**2 * (m - 1) + 72 * m * n + 16 * m + 46 * n - 22),
        (4, "i", R, E, "path", "path", 2, 2,
         lambda n, m: (n - 1) * (m + 2) ** 3 + m * (n - 1) ** 3 + 6 * (m - 1) * (n - 1) ** 2 + 12 * m * n - 4 * m + 46 * n - 94),
        (4, "ii", R, E, "path", "cycle", 2, 3,
         lambda n, m: (n - 1) * (m + 2) ** 3 + m * (n - 1) ** 2 * (n + 5) + 12 * m * n - 4 * m + 64 * n - 112),
        (4, "iii", R, E, "cycle", "cycle", 3, 3,
         lambda n, m: n * (m + 2) ** 3 + m * n**3 + 6 * m * n**2 + 12 * m * n + 8 * m + 64 * n),
        (4, "iv", R, E, "cycle", "path", 3, 2,
         lambda n, m: n * (m + 2) ** 3 + m * n**3 + 6 * (m - 1) * n**2 + 12 * m * n + 8 * m + 46 * n - 14),
        (5, "i", Q, V, "path", "path", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * m**2 * (n - 1) + 6 * n**2 * (m - 1) + 24 * m * n - 10 * m + 54 * n - 166),
        (5, "ii", Q, V, "path", "cycle", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * m**2 * (n - 1) + 6 * n**2 * m + 24 * m * n - 10 * m + 72 * n - 152),
        (5, "iii", Q, V, "cycle", "cycle", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * m * n * (m + n) + 24 * m * n + 8 * m + 72 * n),
        (5, "iv", Q, V, "cycle", "path", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * m * n * (m + n) - 6 * n**2 + 24 * m * n + 8 * m + 54 * n - 14),
        (6, "i", Q, E, "path", "path", 4, 3,
         lambda n, m: m * (n - 1) * ((n - 1) ** 2 + m**2) + 3 * m**2 * (4 * n - 6) + 6 * (m - 1) * (n - 1) ** 2 + 60 * m * n - 94 * m + 54 * n - 148),
        (6, "ii", Q, E, "path", "cycle", 4, 3,
         lambda n, m: m * (n - 1) * ((n - 1) ** 2 + m**2) + 3 * m**2 * (4 * n - 6) + 6 * m * (n - 1) ** 2 + 60 * m * n - 94 * m + 72 * n - 152),
        (6, "iii", Q, E, "cycle", "cycle", 4, 3,
         lambda n, m: m * n * (m**2 + n**2) + 12 * m**2 * n + 6 * m * n**2 + 60 * m * n + 8 * m + 72 * n),
        (6, "iv", Q, E, "cycle", "path", 4, 3,
         lambda n, m: m * n * (m**2 + n**2) + 12 * m**2 * n + 6 * m * n**2 - 6 * n**2 + 60 * m * n + 8 * m + 6 * n - 14),
        (7, "i", T, V, "path", "path", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * n**2 * (m - 1) + 12 * m**2 * (n - 1) + 60 * m * n - 64 * m + 110 * n - 264),
        (7, "ii", T, V, "path", "cycle", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * n**2 * m + 12 * m**2 * (n - 1) + 60 * m * n - 64 * m + 128 * n - 250),
        (7, "iii", T, V, "cycle", "cycle", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * n**2 * m + 12 * m**2 * n + 60 * m * n + 8 * m + 128 * n),
        (7, "iv", T, V, "cycle", "path", 3, 3,
         lambda n, m: m * n * (m**2 + n**2) + 6 * n**2 * (m - 1) + 12 * m**2 * n + 60 * m * n + 8 * m + 110 * n - 14),
        (8, "i", T, E, "path", "path", 3, 2,
         lambda n, m: m**3 * (n - 1) + 3 * m**2 * (4 * n - 6) + m * (n - 1) ** 3 + 6 * (m - 1) * (n - 1) ** 2 + 60 * m * n - 94 * m + 110 * n - 246),
        (8, "ii", T, E, "path", "cycle", 3, 3,
         lambda n, m: m**3 * (n - 1) + 3 * m**2 * (4 * n - 6) + m * (n - 1) ** 3 + 6 * m * (n - 1) ** 2 + 60 * m * n - 94 * m + 128 * n - 250),
        (8, "iii", T, E, "cycle", "cycle", 3, 3,
         lambda n, m: m**3 * n + 12 * m**2 * n + m * n**2 * (n + 6) + 60 * m * n + 8 * m + 128 * n),
        (8, "iv", T, E, "cycle", "path", 3, 3,
         lambda n, m: m**3 * n + 12 * m**2 * n + m * n**3 + 6 * n**2 * (m - 1) + 60 * m * n + 8 * m + 110 * n - 14),
    ]
    table = []
    for example, case, kind, mode, fam1, fam2, n_min, m_min, poly in rows:
        table.append(
            FamilyCase(
                example=example,
                case=case,
                spec=OperationSpec(kind, mode),
                g1_family=fam1,
                g2_family=fam2,
                n_min=max(n_min, _FAMILY_FLOOR[fam1]),
                m_min=max(m_min, _FAMILY_FLOOR[fam2]),
                value=poly,
            )
        )
    return tuple(table)


FAMILY_CASES: tuple[FamilyCase, ...] = _build_table()

_BY_LABEL = {(case.example, case.case): case for case in FAMILY_CASES}


def family_case(example: int, case: str) -> FamilyCase:
    """Look up one table entry by its ``example.case`` identity."""
    try:
        return _BY_LABEL[(example, case)]
    except KeyError:
        raise GraphError(f"no tabulated case {example}.{case}") from None


def family_value(example: int, case: str, n: int, m: int) -> int:
    """Evaluate a tabulated polynomial at factor orders ``(n, m)``."""
    entry = family_case(example, case)
    if n < entry.n_min or m < entry.m_min:
        raise GraphError(
            f"case {entry.label} needs n >= {entry.n_min} and m >= {entry.m_min}, "
            f"got ({n}, {m})"
        )
    return entry.value(n, m)


@dataclass(frozen=True)
class Mismatch:
    n: int
    m: int
    family_value: int
    oracle_value: int


@dataclass(frozen=True)
class CaseResult:
    """Audit outcome for one table entry over its grid."""

    case: FamilyCase
    points: int
    mismatches: tuple[Mismatch, ...]

    @property
    def verified(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "example": self.case.example,
            "case": self.case.case,
            "kind": self.case.spec.kind.value,
            "mode": self.case.spec.mode.value,
            "g1_family": self.case.g1_family,
            "g2_family": self.case.g2_family,
            "n_min": self.case.n_min,
            "m_min": self.case.m_min,
            "points": self.points,
            "verdict": "verified" if self.verified else "mismatch",
            "mismatches": [
                {
                    "n": miss.n,
                    "m": miss.m,
                    "family_value": miss.family_value,
                    "oracle_value": miss.oracle_value,
                }
                for miss in self.mismatches
            ],
        }


@dataclass(frozen=True)
class AuditReport:
    n_max: int
    m_max: int
    results: tuple[CaseResult, ...]

    @property
    def mismatched_cases(self) -> tuple[CaseResult, ...]:
        return tuple(result for result in self.results if not result.verified)

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "m_max": self.m_max,
            "cases": [result.as_dict() for result in self.results],
            "summary": {
                "cases": len(self.results),
                "verified": sum(1 for r in self.results if r.verified),
                "mismatched": len(self.mismatched_cases),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def audit_examples(n_max: int = 8, m_max: int = 8) -> AuditReport:
    """Replay every tabulated case on its grid against the closed form.

    For each entry the operands are actually constructed, so the oracle side
    is :func:`theorem_value` over real invariant bundles, not another
    pencil-and-paper formula.
    """
    cache: dict[tuple[str, int], GraphInvariants] = {}

    def factor(family: str, size: int) -> GraphInvariants:
        key = (family, size)
        if key not in cache:
            cache[key] = invariants(generate(family, size))
        return cache[key]

    results = []
    for entry in FAMILY_CASES:
        points = 0
        mismatches = []
        for n in range(entry.n_min, n_max + 1):
            for m in range(entry.m_min, m_max + 1):
                points += 1
                tabulated = entry.value(n, m)
                oracle = theorem_value(
                    entry.spec, factor(entry.g1_family, n), factor(entry.g2_family, m)
                )
                if tabulated != oracle:
                    mismatches.append(Mismatch(n, m, tabulated, oracle))
        results.append(CaseResult(entry, points, tuple(mismatches)))
    return AuditReport(n_max, m_max, tuple(results))
