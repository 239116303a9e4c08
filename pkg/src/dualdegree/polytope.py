"""Extreme points and facets of the polytope of dual degree partitions.

For even ``n`` the extreme points are ``A(k) = (n^k, 0^(n-1-k))``.  For odd
``n`` there are three families::

    A(k)   = (n^(2k), 0, ...)                    0 <= 2k <= n-1
    B(k,l) = (n^(2k), (n-1)^(2l+1), 0, ...)      0 <= 2k+2l <= n-3
    C(k,l) = (n^(2k+1), 1^(2l+1), 0, ...)        0 <= 2k+2l <= n-3

where ``v^m`` means ``m`` copies of ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DegreePartition,
    DualDegreePartition,
    MajorizationReport,
    SimpleGraph,
    berge_realizable,
    conjugate,
    degree_partition_of,
    realize,
)
from .exactmath import Inequality, RationalPoint, to_point

__all__ = [
    "ExtremePointLabel",
    "FacetSystem",
    "Inequality",
    "extreme_points",
    "point_for_label",
    "labels",
    "facet_system",
    "facet_membership",
    "regular_graph",
    "extreme_point_realization",
    "extremes_to_json",
    "realization_graph",
]


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")


@dataclass(frozen=True, order=True)
class ExtremePointLabel:
    kind: str
    k: int
    l: int = 0  # noqa: E741

    def validate(self, n: int) -> None:
        _check_n(n)
        if self.k < 0 or self.l < 0:
            raise ValueError(f"negative index in {self}")
        if self.kind == "A":
            if self.l != 0:
                raise ValueError("A labels take no second index")
            bound = n - 1 if n % 2 == 0 else (n - 1) // 2
            if self.k > bound:
                raise ValueError(f"{self} out of range for n={n}")
        elif self.kind in ("B", "C"):
            if n % 2 == 0:
                raise ValueError(f"{self.kind} points exist only for odd n")
            if 2 * self.k + 2 * self.l > n - 3:
                raise ValueError(f"{self} out of range for n={n}")
        else:
            raise ValueError(f"unknown label kind {self.kind!r}")

    def __str__(self) -> str:
        if self.kind == "A":
            return f"A({self.k})"
        return f"{self.kind}({self.k},{self.l})"

    @classmethod
    def parse(cls, text: str) -> ExtremePointLabel:
        text = text.strip()
        kind, rest = text[0], text[1:]
        if not (rest.startswith("(") and rest.endswith(")")):
            raise ValueError(f"bad label {text!r}")
        idx = [int(v) for v in rest[1:-1].split(",")]
        return cls(kind, *idx)


def labels(n: int) -> list[ExtremePointLabel]:
    """Labels in emission order: A by ``k``, then B and C by ``(k, l)``."""
    _check_n(n)
    if n % 2 == 0:
        return [ExtremePointLabel("A", k) for k in range(n)]
    out = [ExtremePointLabel("A", k) for k in range((n - 1) // 2 + 1)]
    pairs = [(k, l) for k in range(n) for l in range(n) if 2 * k + 2 * l <= n - 3]
    out += [ExtremePointLabel("B", k, l) for k, l in pairs]
    out += [ExtremePointLabel("C", k, l) for k, l in pairs]
    return out


def point_for_label(label: ExtremePointLabel, n: int) -> DualDegreePartition:
    label.validate(n)
    k, l = label.k, label.l
    if label.kind == "A":
        ones = k if n % 2 == 0 else 2 * k
        head = [n] * ones
    elif label.kind == "B":
        head = [n] * (2 * k) + [n - 1] * (2 * l + 1)
    else:
        head = [n] * (2 * k + 1) + [1] * (2 * l + 1)
    return DualDegreePartition(n, tuple(head + [0] * (n - 1 - len(head))))


def extreme_points(n: int) -> list[tuple[ExtremePointLabel, DualDegreePartition]]:
    return [(lab, point_for_label(lab, n)) for lab in labels(n)]


def extremes_to_json(n: int) -> dict:
    return {
        "n": n,
        "points": [{"label": str(lab), "x": list(x.values)} for lab, x in extreme_points(n)],
    }


@dataclass(frozen=True)
class FacetSystem:
    """Inequalities cutting out the polytope in ``R^(n-1)``."""

    n: int
    inequalities: tuple[Inequality, ...]

    @property
    def dim(self) -> int:
        return self.n - 1

    def __len__(self) -> int:
        return len(self.inequalities)

    def __iter__(self):
        return iter(self.inequalities)

    def to_json(self) -> list[dict]:
        return [q.to_json() for q in self.inequalities]


def facet_system(n: int) -> FacetSystem:
    """``x_1 <= n``, ``x_(i+1) <= x_i``, ``-x_(n-1) <= 0``, plus the
    alternating-sum bound ``(x_1 - x_2) + ... + (x_(n-2) - x_(n-1)) <= n - 1``
    when ``n`` is odd."""
    _check_n(n)
    dim = n - 1

    def unit(pairs: dict[int, int]) -> tuple[int, ...]:
        return tuple(pairs.get(i, 0) for i in range(dim))

    ineqs = [Inequality(unit({0: 1}), n)]
    ineqs += [Inequality(unit({i: -1, i + 1: 1}), 0) for i in range(dim - 1)]
    ineqs.append(Inequality(unit({dim - 1: -1}), 0))
    if n % 2 == 1:
        ineqs.append(Inequality(tuple(1 if i % 2 == 0 else -1 for i in range(dim)), n - 1))
    return FacetSystem(n, tuple(ineqs))


def facet_membership(x, n: int) -> tuple[bool, list[int]]:
    """Check ``x`` against :func:`facet_system`; returns violated indices (0-based)."""
    values = x.values if isinstance(x, DualDegreePartition) else x
    point: RationalPoint = to_point(values)
    if len(point) != n - 1:
        raise ValueError(f"dimension mismatch: expected {n - 1} coordinates, got {len(point)}")
    violated = [i for i, q in enumerate(facet_system(n).inequalities) if not q.holds(point)]
    return not violated, violated


def regular_graph(n: int, k: int) -> SimpleGraph:
    """A ``k``-regular graph on ``n`` vertices (``n`` even).

    For ``k <= n/2`` this is the union of ``k`` perfect matchings of
    ``K_(n/2,n/2)``; matching ``m`` joins left vertex ``i`` to right vertex
    ``(i + m) mod n/2``.  Larger ``k`` use the complement of the
    ``(n-1-k)``-regular graph.
    """
    if n % 2 or n < 2:
        raise ValueError(f"n must be a positive even number, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"degree {k} out of range 0..{n - 1}")
    half = n // 2
    if k > half:
        return regular_graph(n, n - 1 - k).complement()
    edges = {(i + 1, half + (i + m) % half + 1) for m in range(k) for i in range(half)}
    return SimpleGraph(n, frozenset(edges))


def extreme_point_realization(
    label: ExtremePointLabel, n: int
) -> tuple[DegreePartition, MajorizationReport]:
    """The degree partition whose conjugate is the labeled point, with its Berge slacks.

    A(k) comes from the all-``2k`` sequence (all-``k`` for even ``n``),
    B(k,l) from ``(2k+2l+1)^(n-1), 2k`` and C(k,l) from
    ``2k+2l+2, (2k+1)^(n-1)``.
    """
    label.validate(n)
    k, l = label.k, label.l
    if label.kind == "A":
        d = [k if n % 2 == 0 else 2 * k] * n
    elif label.kind == "B":
        d = [2 * k + 2 * l + 1] * (n - 1) + [2 * k]
    else:
        d = [2 * k + 2 * l + 2] + [2 * k + 1] * (n - 1)
    partition = DegreePartition(tuple(d))
    ok, report = berge_realizable(partition)
    if conjugate(partition) != point_for_label(label, n):
        raise AssertionError(f"conjugate of {partition} is not {label} for n={n}")
    if not ok:
        raise AssertionError(f"{partition} for {label} fails Berge's criterion")
    return partition, report


def realization_graph(label: ExtremePointLabel, n: int) -> SimpleGraph:
    """A concrete graph whose dual degree partition is the labeled point."""
    label.validate(n)
    if n % 2 == 0:
        g = regular_graph(n, label.k)
    else:
        g = realize(extreme_point_realization(label, n)[0])
    assert conjugate(degree_partition_of(g)) == point_for_label(label, n)
    return g

