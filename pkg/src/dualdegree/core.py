"""Degree partitions, their conjugates, and Berge's realizability test.

Vertices are labeled ``1..n`` in the order of the degree partition, so
vertex ``i`` has the ``i``-th largest degree.  Dual degree partitions are
kept in suppressed form: the last coordinate ``d*_n`` is always zero for a
degree partition and is dropped, leaving ``n - 1`` coordinates.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import accumulate

__all__ = [
    "DegreePartition",
    "DualDegreePartition",
    "MajorizationReport",
    "SimpleGraph",
    "NotRealizable",
    "degree_partition_of",
    "conjugate",
    "inverse_conjugate",
    "corrected_conjugate",
    "ferrers_matrix",
    "majorize",
    "berge_realizable",
    "realize",
    "odd_degree_alternating_sum",
    "render_ferrers",
    "parse_sequence",
    "format_sequence",
]


def _non_increasing(values: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(values, values[1:]))


@dataclass(frozen=True)
class DegreePartition:
    """Non-increasing degree sequence ``n-1 >= d_1 >= ... >= d_n >= 0``."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        n = len(values)
        if n == 0:
            raise ValueError("a degree partition needs at least one vertex")
        if any(not isinstance(v, int) or isinstance(v, bool) for v in values):
            raise TypeError(f"degrees must be integers, got {values!r}")
        if not _non_increasing(values):
            raise ValueError(f"degrees must be non-increasing, got {values!r}")
        if values[0] > n - 1 or values[-1] < 0:
            raise ValueError(f"degrees must lie in [0, {n - 1}], got {values!r}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        return format_sequence(self.values)


@dataclass(frozen=True)
class DualDegreePartition:
    """Conjugate of a degree partition in suppressed (length ``n - 1``) form."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        if len(values) != self.n - 1:
            raise ValueError(
                f"a dual partition for n={self.n} has {self.n - 1} entries, got {len(values)}"
            )
        if any(not isinstance(v, int) or isinstance(v, bool) for v in values):
            raise TypeError(f"entries must be integers, got {values!r}")
        if not _non_increasing(values):
            raise ValueError(f"entries must be non-increasing, got {values!r}")
        if values and (values[0] > self.n or values[-1] < 0):
            raise ValueError(f"entries must lie in [0, {self.n}], got {values!r}")

    def expanded(self) -> tuple[int, ...]:
        """The length-``n`` form with the implicit trailing zero."""
        return self.values + (0,)

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        return format_sequence(self.values)


@dataclass(frozen=True)
class MajorizationReport:
    """Slacks ``A_k - B_k`` for ``k = 1..n`` and whether ``a`` majorizes ``b``."""

    slacks: tuple[int, ...]
    majorizes: bool

    @property
    def first_violation(self) -> int | None:
        """1-based index of the first negative slack, or ``n`` if only the total differs."""
        for k, s in enumerate(self.slacks, start=1):
            if s < 0:
                return k
        if self.slacks and self.slacks[-1] != 0:
            return len(self.slacks)
        return None

    @property
    def increments(self) -> tuple[int, ...]:
        """Per-step change of the slack, ``A_k - B_k - (A_(k-1) - B_(k-1))``."""
        prev = (0,) + self.slacks[:-1]
        return tuple(s - p for s, p in zip(self.slacks, prev))


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices ``1..n`` without loops or multiple edges.

    Edges are stored as ``(i, j)`` pairs with ``i < j``.
    """

    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        normalized = set()
        for edge in self.edges:
            i, j = edge
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {i}-{j} outside vertex range 1..{self.n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(normalized))

    def degrees(self) -> list[int]:
        """Degree of each vertex, indexed by label minus one."""
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i - 1] += 1
            deg[j - 1] += 1
        return deg

    def complement(self) -> SimpleGraph:
        all_pairs = {(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)}
        return SimpleGraph(self.n, frozenset(all_pairs - self.edges))

    def to_edge_list(self) -> str:
        return "".join(f"{i}-{j}\n" for i, j in sorted(self.edges))

    @classmethod
    def from_edge_list(cls, text: str, n: int | None = None) -> SimpleGraph:
        """Parse ``i-j`` lines (1-based labels).  ``n`` defaults to the largest label."""
        edges = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("-")
            if len(parts) != 2:
                raise ValueError(f"line {lineno}: expected 'i-j', got {line!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise ValueError(f"line {lineno}: expected 'i-j', got {line!r}") from None
        if n is None:
            n = max((max(e) for e in edges), default=0)
        if len(set(map(lambda e: (min(e), max(e)), edges))) != len(edges):
            raise ValueError("duplicate edge in edge list")
        return cls(n, frozenset(edges))


class NotRealizable(ValueError):
    """Raised by :func:`realize` when no simple graph has the given degrees.

    ``odd_sum`` flags an odd degree total; otherwise ``slack_index`` is the
    1-based index of the first failing majorization slack and ``slack`` its value.
    """

    def __init__(
        self,
        d: DegreePartition,
        odd_sum: bool,
        slack_index: int | None = None,
        slack: int | None = None,
    ) -> None:
        self.d = d
        self.odd_sum = odd_sum
        self.slack_index = slack_index
        self.slack = slack
        super().__init__(describe_failure(d.values, odd_sum, slack_index, slack))


def describe_failure(values, odd_sum, slack_index, slack) -> str:
    if odd_sum:
        return f"NOT realizable (odd degree sum {sum(values)})"
    if slack_index is not None:
        return f"NOT realizable (slack {slack} at k={slack_index})"
    return "NOT realizable"


def _as_degree_partition(d) -> DegreePartition:
    return d if isinstance(d, DegreePartition) else DegreePartition(tuple(d))


def degree_partition_of(g: SimpleGraph) -> DegreePartition:
    return DegreePartition(tuple(sorted(g.degrees(), reverse=True)))


def conjugate(d) -> DualDegreePartition:
    """Count vertices of degree at least ``j`` for ``j = 1..n-1``."""
    d = _as_degree_partition(d)
    n = d.n
    return DualDegreePartition(n, tuple(sum(1 for v in d.values if v >= j) for j in range(1, n)))


def inverse_conjugate(x, n: int | None = None) -> DegreePartition:
    """Recover the degree partition whose conjugate is ``x``.

    ``x`` may be a :class:`DualDegreePartition` or a plain sequence, in which
    case ``n`` defaults to ``len(x) + 1``.
    """
    if not isinstance(x, DualDegreePartition):
        values = tuple(x)
        x = DualDegreePartition(len(values) + 1 if n is None else n, values)
    elif n is not None and n != x.n:
        raise ValueError(f"n={n} does not match dual partition with n={x.n}")
    return DegreePartition(tuple(sum(1 for v in x.values if v >= i) for i in range(1, x.n + 1)))


def corrected_conjugate(d) -> tuple[int, ...]:
    """Column sums of the corrected Ferrers diagram of ``d``.

    Column ``j`` collects a one from each row ``i < j`` with ``d_i >= j - 1``
    (either an ordinary cell or a displaced diagonal cell) and from each row
    ``i > j`` with ``d_i >= j``.  The diagonal cell itself never counts.
    """
    d = _as_degree_partition(d).values
    n = len(d)
    out = []
    for j in range(1, n + 1):
        above = sum(1 for i in range(1, j) if d[i - 1] >= j - 1)
        below = sum(1 for i in range(j + 1, n + 1) if d[i - 1] >= j)
        out.append(above + below)
    return tuple(out)


def ferrers_matrix(d, corrected: bool = False) -> list[list[int]]:
    """The ``n x n`` 0/1 Ferrers diagram of ``d``, optionally Berge-corrected.

    The corrected variant moves each one on the main diagonal to the first
    free cell at the end of its row.
    """
    d = _as_degree_partition(d).values
    n = len(d)
    rows = [[1] * v + [0] * (n - v) for v in d]
    if corrected:
        for i, v in enumerate(d):
            if rows[i][i] == 1:
                rows[i][i] = 0
                rows[i][v] = 1
    return rows


def majorize(a: Sequence[int], b: Sequence[int], keep_order: bool = False) -> MajorizationReport:
    """Compare partial sums of the descending sorts of ``a`` and ``b``.

    With ``keep_order`` the prefix sums of ``a`` are taken in the order
    given instead of after sorting; ``b`` is always sorted.  Inputs are
    never mutated.
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    partial_a = accumulate(a if keep_order else sorted(a, reverse=True))
    partial_b = accumulate(sorted(b, reverse=True))
    slacks = tuple(x - y for x, y in zip(partial_a, partial_b))
    ok = all(s >= 0 for s in slacks) and (not slacks or slacks[-1] == 0)
    return MajorizationReport(slacks, ok)


def berge_realizable(d) -> tuple[bool, MajorizationReport]:
    """Berge's criterion: even degree sum and corrected conjugate dominates ``d``.

    The corrected conjugate is compared in its column order, not sorted:
    ``sum(cbar[:k]) >= sum(d[:k])`` for every ``k``.  Sorting it first
    gives a strictly weaker test that accepts non-graphical sequences such
    as ``(4,4,4,1,1,1,1)``.
    """
    d = _as_degree_partition(d)
    report = majorize(corrected_conjugate(d), d.values, keep_order=True)
    return sum(d.values) % 2 == 0 and report.majorizes, report


def realize(d) -> SimpleGraph:
    """Build a graph with degree partition ``d`` by Havel-Hakimi.

    The vertex with the largest remaining demand (smallest label on ties) is
    joined to the next-largest remaining demands, again breaking ties by
    label.  Raises :class:`NotRealizable` when the procedure gets stuck.
    """
    d = _as_degree_partition(d)
    n = d.n
    remaining = list(d.values)
    edges = set()
    while True:
        order = sorted(range(n), key=lambda v: (-remaining[v], v))
        head = order[0]
        need = remaining[head]
        if need == 0:
            break
        partners = order[1 : need + 1]
        if len(partners) < need or remaining[partners[-1]] == 0:
            ok, report = berge_realizable(d)
            odd = sum(d.values) % 2 == 1
            k = None if odd else report.first_violation
            slack = report.slacks[k - 1] if k is not None else None
            raise NotRealizable(d, odd, k, slack)
        remaining[head] = 0
        for v in partners:
            remaining[v] -= 1
            edges.add((head + 1, v + 1))
    return SimpleGraph(n, frozenset(edges))


def odd_degree_alternating_sum(x) -> int:
    """``(x_1 - x_2) + (x_3 - x_4) + ...`` over a dual partition.

    Each difference ``x_j - x_{j+1}`` counts the vertices of degree exactly
    ``j``, so the total is the number of odd-degree vertices.  The implicit
    trailing zero closes the last pair when ``n`` is even.
    """
    values = x.values if isinstance(x, DualDegreePartition) else tuple(x)
    return sum(values[0::2]) - sum(values[1::2])


def render_ferrers(d, corrected: bool = False) -> str:
    """Plain-text diagram: a header of column sums, then one labeled row per vertex."""
    d = _as_degree_partition(d)
    rows = ferrers_matrix(d, corrected)
    n = d.n
    col_sums = [sum(r[j] for r in rows) for j in range(n)]
    width = max(len(str(v)) for v in list(d.values) + col_sums)
    cell = lambda v: str(v).rjust(width)  # noqa: E731
    lines = [" " * width + " | " + " ".join(cell(c) for c in col_sums)]
    lines.append("-" * width + "-+-" + "-" * (len(lines[0]) - width - 3))
    for label, row in zip(d.values, rows):
        lines.append(cell(label) + " | " + " ".join(cell(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse ``"4,3,3,2"``; whitespace around tokens is ignored."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for token in text.split(","):
        try:
            out.append(int(token.strip()))
        except ValueError:
            raise ValueError(f"bad token {token.strip()!r} in sequence {text!r}") from None
    return tuple(out)


def format_sequence(values: Iterable[int]) -> str:
    return ",".join(str(v) for v in values)
