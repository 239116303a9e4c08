"""Brute-force verification of the extreme-point and facet descriptions.

For a given ``n`` the harness compares three sets: the hull ``P`` of the
claimed extreme points, the hull ``Q`` of all realizable dual degree
partitions, and the polytope ``R`` cut out by the facet system.  Each
containment is checked exhaustively with exact arithmetic, and every
failed check keeps the first counterexample it found.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .core import (
    DegreePartition,
    DualDegreePartition,
    berge_realizable,
    conjugate,
    format_sequence,
    inverse_conjugate,
    odd_degree_alternating_sum,
)
from .exactmath import (
    HullCertificate,
    Inequality,
    affine_rank,
    extremality_check,
    hull_membership,
    maximize,
    to_point,
    vertex_enumeration,
)
from .polytope import extreme_points, facet_membership, facet_system

__all__ = [
    "DEFAULT_MAX_N",
    "CheckResult",
    "TheoremReport",
    "CounterexampleReport",
    "enumerate_partitions",
    "enumerate_realizable",
    "graphical_by_brute_force",
    "verify_theorem",
    "counterexample_check",
    "irredundancy_witnesses",
    "facet_minimality_check",
]

DEFAULT_MAX_N = 9
BRUTE_FORCE_MAX_N = 6

CHECK_NAMES = (
    "Q_subset_R",
    "extremes_realizable",
    "Q_subset_P",
    "extremes_extremal",
    "vertex_enum_matches",
    "affine_rank_full",
)


def _guard(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the configured maximum {max_n}; raise max_n to proceed")


def enumerate_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Every non-increasing sequence in ``[0, n-1]^n``, lexicographically decreasing."""

    def extend(prefix: list[int], cap: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(cap, -1, -1):
            prefix.append(v)
            yield from extend(prefix, v)
            prefix.pop()

    yield from extend([], n - 1)


def enumerate_realizable(n: int, max_n: int = DEFAULT_MAX_N) -> Iterator[DegreePartition]:
    """Degree partitions on ``n`` vertices that pass Berge's criterion."""
    _guard(n, max_n)
    for values in enumerate_partitions(n):
        d = DegreePartition(values)
        if berge_realizable(d)[0]:
            yield d


def graphical_by_brute_force(n: int) -> set[tuple[int, ...]]:
    """Sorted degree sequences of all ``2^C(n,2)`` labeled graphs on ``n`` vertices."""
    _guard(n, BRUTE_FORCE_MAX_N)
    pairs = list(combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        deg = [0] * n
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                deg[i] += 1
                deg[j] += 1
        seen.add(tuple(sorted(deg, reverse=True)))
    return seen


@dataclass
class CheckResult:
    passed: bool
    witness: object = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"passed": self.passed, "witness": _jsonable(self.witness), "detail": self.detail}


def _jsonable(obj):
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (DegreePartition, DualDegreePartition)):
        return list(obj.values)
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in obj]
    return str(obj)


@dataclass
class TheoremReport:
    n: int
    counts: dict[str, int] = field(default_factory=dict)
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "counts": dict(self.counts),
            "checks": {name: c.to_json() for name, c in self.checks.items()},
        }

    def to_text(self) -> str:
        lines = [f"n = {self.n}: {'PASS' if self.passed else 'FAIL'}"]
        for key, value in self.counts.items():
            lines.append(f"  {key}: {value}")
        for name, check in self.checks.items():
            line = f"  [{'ok' if check.passed else 'FAILED'}] {name}"
            if check.detail:
                line += f" ({check.detail})"
            if not check.passed and check.witness is not None:
                line += f" witness={_jsonable(check.witness)}"
            lines.append(line)
        return "\n".join(lines) + "\n"


def verify_theorem(n: int, max_n: int = DEFAULT_MAX_N) -> TheoremReport:
    """Check ``P = Q = R`` for ``n`` vertices by exhaustive enumeration.

    The six checks are: every realizable dual partition satisfies the facet
    system; every claimed extreme point is realizable; every realizable dual
    partition is a convex combination of the claimed points; every claimed
    point is extremal among them; vertex enumeration of the facet system
    returns exactly the claimed points; the claimed points span ``R^(n-1)``.
    """
    _guard(n, max_n)
    if n < 2:
        raise ValueError("the polytope needs n >= 2")
    report = TheoremReport(n)
    claimed = [x for _, x in extreme_points(n)]
    claimed_pts = [to_point(x.values) for x in claimed]
    duals = [conjugate(d) for d in enumerate_realizable(n, max_n)]
    report.counts = {
        "realizable_degree_partitions": len(duals),
        "distinct_dual_partitions": len(set(duals)),
        "claimed_extremes": len(claimed),
    }

    bad = next((x for x in duals if not facet_membership(x, n)[0]), None)
    report.checks["Q_subset_R"] = CheckResult(bad is None, bad)

    bad = next((x for x in claimed if not berge_realizable(inverse_conjugate(x))[0]), None)
    report.checks["extremes_realizable"] = CheckResult(bad is None, bad)

    bad = None
    for x in duals:
        if not hull_membership(to_point(x.values), claimed_pts).inside:
            bad = x
            break
    report.checks["Q_subset_P"] = CheckResult(bad is None, bad)

    bad = next(
        (claimed[i] for i in range(len(claimed_pts)) if not extremality_check(i, claimed_pts)),
        None,
    )
    report.checks["extremes_extremal"] = CheckResult(bad is None, bad)

    vertices = vertex_enumeration(facet_system(n))
    expected = set(claimed_pts)
    diff = sorted(vertices ^ expected)
    report.checks["vertex_enum_matches"] = CheckResult(
        not diff, diff[0] if diff else None, f"{len(vertices)} vertices"
    )

    r = affine_rank(claimed_pts)
    report.checks["affine_rank_full"] = CheckResult(r == n - 1, r, f"rank {r}")
    return report


@dataclass
class CounterexampleReport:
    """Facts about an integral point of the facet polytope.

    ``is_counterexample`` holds when the point has even component sum,
    satisfies every facet, and is still not a realizable dual partition.
    """

    n: int
    x: tuple[int, ...]
    integral: bool
    component_sum: int
    facet_member: bool
    violated: list[int]
    alternating_sum: int
    inverse: DegreePartition | None
    realizable: bool
    slacks: tuple[int, ...] | None
    first_violation: int | None
    hull: HullCertificate | None

    @property
    def even_sum(self) -> bool:
        return self.component_sum % 2 == 0

    @property
    def first_slack(self) -> int | None:
        if self.slacks is None or self.first_violation is None:
            return None
        return self.slacks[self.first_violation - 1]

    @property
    def is_counterexample(self) -> bool:
        return self.integral and self.even_sum and self.facet_member and not self.realizable

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "x": list(self.x),
            "integral": self.integral,
            "component_sum": self.component_sum,
            "even_sum": self.even_sum,
            "facet_member": self.facet_member,
            "violated": self.violated,
            "alternating_sum": self.alternating_sum,
            "inverse_conjugate": None if self.inverse is None else list(self.inverse.values),
            "realizable": self.realizable,
            "slacks": None if self.slacks is None else list(self.slacks),
            "first_violation": self.first_violation,
            "first_slack": self.first_slack,
            "hull": None if self.hull is None else self.hull.to_json(),
            "is_counterexample": self.is_counterexample,
        }

    def to_text(self) -> str:
        d = "n/a" if self.inverse is None else format_sequence(self.inverse.values)
        lines = [
            f"x = ({format_sequence(self.x)}), n = {self.n}",
            f"  integral: {self.integral}; component sum {self.component_sum} "
            f"({'even' if self.even_sum else 'odd'})",
            f"  satisfies all facets: {self.facet_member}"
            + (f" (violates {self.violated})" if self.violated else ""),
            f"  alternating sum: {self.alternating_sum}",
            f"  inverse conjugate: ({d})",
            f"  realizable: {self.realizable}"
            + (
                f" (slack {self.first_slack} at k={self.first_violation})"
                if self.first_violation is not None
                else ""
            ),
            f"  hull certificate: {'n/a' if self.hull is None else self.hull.verdict}",
            "  => integral point of the polytope that is NOT a realizable dual partition"
            if self.is_counterexample
            else "  => not a counterexample",
        ]
        return "\n".join(lines) + "\n"


def counterexample_check(x: Sequence[int] = (5, 3, 3, 3, 3, 3), n: int = 7) -> CounterexampleReport:
    """Examine an integral point of the facet polytope for realizability.

    The default is an integral point with even sum that satisfies every
    facet for ``n = 7`` but whose degree partition ``(6,6,6,1,1,0,0)``
    is not graphical.
    """
    point = to_point(x)
    integral = all(v.denominator == 1 for v in point)
    values = tuple(int(v) for v in point) if integral else tuple(x)
    member, violated = facet_membership(point, n)
    alt = sum(point[0::2]) - sum(point[1::2])
    inverse = None
    realizable = False
    slacks = None
    first = None
    if integral:
        try:
            inverse = inverse_conjugate(DualDegreePartition(n, values))
        except ValueError:
            inverse = None
    if inverse is not None:
        realizable, maj = berge_realizable(inverse)
        slacks = maj.slacks
        first = maj.first_violation
    hull = None
    if member:
        hull = hull_membership(point, [to_point(p.values) for _, p in extreme_points(n)])
    return CounterexampleReport(
        n=n,
        x=values,
        integral=integral,
        component_sum=sum(values) if integral else sum(point),
        facet_member=member,
        violated=violated,
        alternating_sum=int(alt) if alt.denominator == 1 else alt,
        inverse=inverse,
        realizable=realizable,
        slacks=slacks,
        first_violation=first,
        hull=hull,
    )


def irredundancy_witnesses(system) -> list[tuple[Fraction, ...] | None]:
    """For each inequality, a point satisfying all others but violating it.

    ``None`` marks a redundant inequality.  The search maximizes the
    dropped left-hand side over the remaining system, capped at
    ``rhs + 1`` so that unbounded directions still yield a finite witness.
    """
    if isinstance(system, int):
        system = facet_system(system)
    ineqs: list[Inequality] = list(getattr(system, "inequalities", system))
    out = []
    for i, dropped in enumerate(ineqs):
        rest = ineqs[:i] + ineqs[i + 1 :]
        cap = Inequality(dropped.coeffs, dropped.rhs + 1)
        res = maximize(dropped.coeffs, rest + [cap])
        witness = None
        if res.status == "optimal" and res.value > dropped.rhs:
            x = res.x
            if all(q.holds(x) for q in rest) and not dropped.holds(x):
                witness = x
        out.append(witness)
    return out


def facet_minimality_check(system) -> bool:
    """True iff no inequality of ``system`` (or ``facet_system(n)``) is implied by the others."""
    return all(w is not None for w in irredundancy_witnesses(system))


def reports_to_json(reports: Sequence[TheoremReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)


def alternating_sums(n: int, max_n: int = DEFAULT_MAX_N) -> list[int]:
    """Alternating sums of every realizable dual partition on ``n`` vertices."""
    return [odd_degree_alternating_sum(conjugate(d)) for d in enumerate_realizable(n, max_n)]
