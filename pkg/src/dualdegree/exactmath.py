"""Exact rational linear algebra and linear programming.

Everything here works on :class:`fractions.Fraction`; no floating point is
involved anywhere.  The simplex method uses Bland's rule, so it terminates
on degenerate problems.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Union

__all__ = [
    "Rational",
    "RationalPoint",
    "Inequality",
    "HullCertificate",
    "LPResult",
    "EmptyPolyhedronError",
    "UnboundedPolyhedronError",
    "to_point",
    "format_rational",
    "parse_rational",
    "solve",
    "rank",
    "linprog",
    "maximize",
    "hull_membership",
    "vertex_enumeration",
    "affine_rank",
    "extremality_check",
]

Rational = Fraction
RationalPoint = tuple[Fraction, ...]
Number = Union[int, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class EmptyPolyhedronError(ValueError):
    """The inequality system has no feasible point."""


class UnboundedPolyhedronError(ValueError):
    """The inequality system describes an unbounded polyhedron."""


def to_point(values: Iterable[Number | str]) -> RationalPoint:
    return tuple(Fraction(v) for v in values)


def format_rational(q: Number) -> str:
    """Serialize as ``"p/q"``, always with an explicit denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(value: Number | str) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(value)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


@dataclass(frozen=True)
class Inequality:
    """The half-space ``coeffs . x <= rhs``."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction

    def __post_init__(self) -> None:
        coeffs = to_point(self.coeffs)
        if all(c == 0 for c in coeffs):
            raise ValueError("inequality needs a nonzero coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "rhs", Fraction(self.rhs))

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def lhs(self, x: Sequence[Number]) -> Fraction:
        if len(x) != self.dim:
            raise ValueError(f"dimension mismatch: point has {len(x)} coords, expected {self.dim}")
        return _dot(self.coeffs, to_point(x))

    def slack(self, x: Sequence[Number]) -> Fraction:
        """``rhs - coeffs . x``; negative means violated."""
        return self.rhs - self.lhs(x)

    def holds(self, x: Sequence[Number]) -> bool:
        return self.slack(x) >= 0

    def to_json(self, exact_strings: bool = False) -> dict:
        conv = format_rational if exact_strings else _json_number
        return {"coeffs": [conv(c) for c in self.coeffs], "rhs": conv(self.rhs)}

    @classmethod
    def from_json(cls, obj: dict) -> Inequality:
        return cls(tuple(parse_rational(c) for c in obj["coeffs"]), parse_rational(obj["rhs"]))

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = f"x{i}" if mag == 1 else f"{mag}*x{i}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return f"{text} <= {self.rhs}"


def _json_number(q: Fraction) -> int | str:
    return q.numerator if q.denominator == 1 else format_rational(q)


# -- dense exact linear algebra ------------------------------------------------


def _row_reduce(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form over the first
    ``ncols`` columns.  Returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(rows: Sequence[Sequence[Number]]) -> int:
    if not rows:
        return 0
    work = [list(to_point(r)) for r in rows]
    return len(_row_reduce(work, len(work[0])))


def solve(a: Sequence[Sequence[Number]], b: Sequence[Number]) -> RationalPoint | None:
    """Unique solution of the square system ``a x = b``, or ``None`` if singular."""
    n = len(a)
    work = [list(to_point(row)) + [Fraction(rhs)] for row, rhs in zip(a, b)]
    pivots = _row_reduce(work, n)
    if len(pivots) < n:
        return None
    return tuple(work[i][n] for i in range(n))


# -- simplex -------------------------------------------------------------------


@dataclass
class LPResult:
    """Outcome of :func:`linprog` or :func:`maximize`.

    ``status`` is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``.
    ``farkas`` is set on infeasibility: a vector ``y`` with ``y^T A <= 0``
    columnwise and ``y^T b > 0`` for the equality system ``A z = b``.
    """

    status: str
    x: RationalPoint | None = None
    value: Fraction | None = None
    farkas: RationalPoint | None = None


def _lcm_denominator(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = lcm(out, v.denominator)
    return out


class _Tableau:
    """Integer-preserving simplex tableau ``[A | I | b]`` plus an objective row.

    Every stored entry is the true tableau entry times the common positive
    denominator ``self.den`` (Edmonds' fraction-free pivoting), so all
    arithmetic stays in Python integers.  The objective row holds reduced
    costs followed by ``-value``.
    """

    def __init__(self, a: list[list[Fraction]], b: list[Fraction]) -> None:
        m = len(a)
        self.ncols = ncols = len(a[0]) if a else 0
        self.m = m
        # original row i = row_scale[i] * stored row i (sign flip and denominator clearing)
        self.row_scale: list[int] = []
        rows = []
        for i in range(m):
            scale = _lcm_denominator(list(a[i]) + [b[i]])
            if b[i] < 0:
                scale = -scale
            art = [0] * m
            art[i] = 1
            rows.append([int(v * scale) for v in a[i]] + art + [int(b[i] * scale)])
            self.row_scale.append(scale)
        self.rows = rows
        self.basis = [ncols + i for i in range(m)]
        self.den = 1
        width = ncols + m
        # phase 1: minimize the sum of artificials
        obj = [-sum(rows[i][j] for i in range(m)) for j in range(ncols)] + [0] * m
        obj.append(-sum(rows[i][-1] for i in range(m)))
        self.obj = obj
        self.active = width

    def pivot(self, r: int, c: int) -> None:
        prow = self.rows[r]
        p = prow[c]
        den = self.den
        nz = [j for j, v in enumerate(prow) if v != 0]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f == 0:
                if p != den:
                    for j in range(len(row)):
                        if row[j]:
                            row[j] = row[j] * p // den
                continue
            new = [v * p for v in row]
            for j in nz:
                new[j] -= f * prow[j]
            self.rows[i] = [v // den for v in new]
        f = self.obj[c]
        new = [v * p for v in self.obj]
        if f != 0:
            for j in nz:
                new[j] -= f * prow[j]
        self.obj = [v // den for v in new]
        self.den = p
        if p < 0:
            self.rows = [[-v for v in row] for row in self.rows]
            self.obj = [-v for v in self.obj]
            self.den = -p
        self.basis[r] = c

    @property
    def value(self) -> Fraction:
        return Fraction(-self.obj[-1], self.den)

    def reduced_cost(self, j: int) -> Fraction:
        return Fraction(self.obj[j], self.den)

    def run(self) -> bool:
        """Minimize with Bland's rule; ``False`` means unbounded."""
        while True:
            obj = self.obj
            enter = next((j for j in range(self.active) if obj[j] < 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    if best is None:
                        best = i
                        continue
                    bi = self.rows[best]
                    # compare row[-1]/a against bi[-1]/bi[enter]
                    lhs = row[-1] * bi[enter]
                    rhs = bi[-1] * a
                    if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                        best = i
            if best is None:
                return False
            self.pivot(best, enter)

    def basic_solution(self, ncols: int) -> list[Fraction]:
        z = [ZERO] * ncols
        for i, j in enumerate(self.basis):
            if j < ncols:
                z[j] = Fraction(self.rows[i][-1], self.den)
        return z


def _phase_one(a: list[list[Fraction]], b: list[Fraction]) -> tuple[_Tableau, RationalPoint | None]:
    tab = _Tableau(a, b)
    tab.run()
    if tab.value > 0:
        # duals of the phase-1 optimum: reduced cost of artificial i is 1 - y_i
        n = tab.ncols
        y = tuple(tab.row_scale[i] * (ONE - tab.reduced_cost(n + i)) for i in range(tab.m))
        return tab, y
    return tab, None


def linprog(
    c: Sequence[Number], a_eq: Sequence[Sequence[Number]], b_eq: Sequence[Number]
) -> LPResult:
    """Minimize ``c . z`` subject to ``a_eq z = b_eq`` and ``z >= 0``."""
    a = [list(to_point(row)) for row in a_eq]
    b = list(to_point(b_eq))
    c = list(to_point(c))
    ncols = len(c)
    if any(len(row) != ncols for row in a):
        raise ValueError("constraint rows must match the objective length")
    if not a:
        if any(v < 0 for v in c):
            return LPResult("unbounded")
        return LPResult("optimal", tuple([ZERO] * ncols), ZERO)

    tab, farkas = _phase_one(a, b)
    if farkas is not None:
        return LPResult("infeasible", farkas=farkas)

    # drive zero-level artificials out of the basis; drop redundant rows
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= ncols:
            col = next((j for j in range(ncols) if tab.rows[r][j] != 0), None)
            if col is None:
                del tab.rows[r]
                del tab.basis[r]
                continue
            tab.pivot(r, col)
        r += 1
    tab.m = len(tab.rows)

    # phase 2 over the original columns only; costs scaled to integers
    scale = _lcm_denominator(c)
    ci = [int(v * scale) for v in c]
    width = len(tab.obj) - 1
    obj = [tab.den * ci[k] if k < ncols else 0 for k in range(width)] + [0]
    for i, j in enumerate(tab.basis):
        cb = ci[j]
        if cb:
            row = tab.rows[i]
            for k in range(width + 1):
                obj[k] -= cb * row[k]
    tab.obj = obj
    tab.active = ncols
    if not tab.run():
        return LPResult("unbounded")
    z = tab.basic_solution(ncols)
    return LPResult("optimal", tuple(z), _dot(c, z))


def maximize(
    objective: Sequence[Number], inequalities: Sequence[Inequality]
) -> LPResult:
    """Maximize ``objective . x`` over ``{x : every inequality holds}``, ``x`` free.

    Uses the split ``x = u - v`` with a slack per inequality.
    """
    dim = len(objective)
    m = len(inequalities)
    a_eq = []
    b_eq = []
    for k, ineq in enumerate(inequalities):
        if ineq.dim != dim:
            raise ValueError("inequality dimension does not match the objective")
        slack = [ZERO] * m
        slack[k] = ONE
        a_eq.append(list(ineq.coeffs) + [-v for v in ineq.coeffs] + slack)
        b_eq.append(ineq.rhs)
    obj = to_point(objective)
    c = [-v for v in obj] + list(obj) + [ZERO] * m
    res = linprog(c, a_eq, b_eq)
    if res.status != "optimal":
        return LPResult(res.status, farkas=res.farkas)
    z = res.x
    x = tuple(z[i] - z[dim + i] for i in range(dim))
    return LPResult("optimal", x, _dot(obj, x))


# -- convex hulls ---------------------------------------------------------------


@dataclass(frozen=True)
class HullCertificate:
    """Exact answer to "is ``query`` in the convex hull of ``points``?".

    ``Inside`` carries convex weights reproducing the query; ``Outside``
    carries a separating inequality valid on every point and violated at
    the query.
    """

    verdict: str
    query: RationalPoint
    weights: RationalPoint | None = None
    separator: Inequality | None = None

    @property
    def inside(self) -> bool:
        return self.verdict == "Inside"

    def check(self, points: Sequence[RationalPoint]) -> bool:
        """Re-verify the certificate using plain arithmetic."""
        if self.inside:
            w = self.weights
            if w is None or len(w) != len(points) or any(v < 0 for v in w) or sum(w) != 1:
                return False
            combo = tuple(
                sum((w[i] * points[i][t] for i in range(len(points))), ZERO)
                for t in range(len(self.query))
            )
            return combo == self.query
        sep = self.separator
        if sep is None:
            return False
        return sep.slack(self.query) < 0 and all(sep.slack(p) >= 0 for p in points)

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict, "query": [format_rational(v) for v in self.query]}
        if self.weights is not None:
            out["weights"] = [format_rational(v) for v in self.weights]
        if self.separator is not None:
            out["separator"] = self.separator.to_json(exact_strings=True)
        return out

    @classmethod
    def from_json(cls, obj: dict) -> HullCertificate:
        weights = obj.get("weights")
        separator = obj.get("separator")
        return cls(
            obj["verdict"],
            to_point(parse_rational(v) for v in obj["query"]),
            None if weights is None else to_point(parse_rational(v) for v in weights),
            None if separator is None else Inequality.from_json(separator),
        )


def hull_membership(
    q: Sequence[Number], pts: Sequence[Sequence[Number]]
) -> HullCertificate:
    """Decide whether ``q`` is a convex combination of ``pts``.

    Phase-1 simplex on ``sum_i w_i p_i = q, sum_i w_i = 1, w >= 0``.  When
    infeasible, the phase-1 duals ``(c, c0)`` satisfy ``c . p_i + c0 <= 0``
    for every point and ``c . q + c0 > 0``, giving the separator
    ``c . x <= -c0``.
    """
    if not pts:
        raise ValueError("need at least one point")
    q = to_point(q)
    points = [to_point(p) for p in pts]
    dim = len(q)
    for p in points:
        if len(p) != dim:
            raise ValueError(f"dimension mismatch: {len(p)} != {dim}")
    m = len(points)
    a = [[points[i][t] for i in range(m)] for t in range(dim)]
    a.append([ONE] * m)
    b = list(q) + [ONE]
    tab, farkas = _phase_one(a, b)
    if farkas is None:
        cert = HullCertificate("Inside", q, weights=tuple(tab.basic_solution(m)))
    else:
        c, c0 = farkas[:dim], farkas[dim]
        if all(v == 0 for v in c):
            raise ArithmeticError("degenerate Farkas vector")
        cert = HullCertificate("Outside", q, separator=Inequality(c, -c0))
    if not cert.check(points):
        raise ArithmeticError(f"hull certificate failed re-verification: {cert}")
    return cert


def _system(system) -> list[Inequality]:
    return list(getattr(system, "inequalities", system))


def vertex_enumeration(system) -> set[RationalPoint]:
    """All vertices of the bounded polyhedron ``{x : inequalities hold}``.

    ``system`` is a sequence of :class:`Inequality` or any object with an
    ``inequalities`` attribute.  Every ``dim``-subset of inequalities is
    solved as an equality system and feasible solutions are kept.
    """
    ineqs = _system(system)
    if not ineqs:
        raise ValueError("empty inequality system")
    dim = ineqs[0].dim
    if any(q.dim != dim for q in ineqs):
        raise ValueError("inequalities of mixed dimension")
    if len(ineqs) < dim:
        raise UnboundedPolyhedronError(f"{len(ineqs)} inequalities cannot bound R^{dim}")

    if maximize([ZERO] * dim, ineqs).status == "infeasible":
        raise EmptyPolyhedronError("inequality system is infeasible")
    if rank([q.coeffs for q in ineqs]) < dim:
        raise UnboundedPolyhedronError("polyhedron contains a line")
    for t in range(dim):
        for sign in (ONE, -ONE):
            obj = [ZERO] * dim
            obj[t] = sign
            if maximize(obj, ineqs).status == "unbounded":
                raise UnboundedPolyhedronError(f"coordinate {t + 1} is unbounded")

    vertices = set()
    for subset in combinations(ineqs, dim):
        x = solve([q.coeffs for q in subset], [q.rhs for q in subset])
        if x is not None and x not in vertices and all(q.holds(x) for q in ineqs):
            vertices.add(x)
    return vertices


def affine_rank(pts: Sequence[Sequence[Number]]) -> int:
    """Rank of ``p_i - p_0``; the points are affinely independent iff this is ``len(pts) - 1``."""
    if not pts:
        raise ValueError("need at least one point")
    base = to_point(pts[0])
    diffs = [[v - w for v, w in zip(to_point(p), base)] for p in pts[1:]]
    return rank(diffs)


def extremality_check(i: int, pts: Sequence[Sequence[Number]]) -> bool:
    """True iff ``pts[i]`` lies outside the convex hull of the remaining points."""
    if len(pts) < 2:
        raise ValueError("need at least two points")
    if not 0 <= i < len(pts):
        raise IndexError(f"index {i} out of range for {len(pts)} points")
    others = [p for j, p in enumerate(pts) if j != i]
    return not hull_membership(pts[i], others).inside
