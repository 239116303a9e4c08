import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dualdegree.core import (
    DegreePartition,
    DualDegreePartition,
    NotRealizable,
    SimpleGraph,
    berge_realizable,
    conjugate,
    corrected_conjugate,
    degree_partition_of,
    ferrers_matrix,
    inverse_conjugate,
    majorize,
    odd_degree_alternating_sum,
    parse_sequence,
    realize,
    render_ferrers,
)
from dualdegree.verify import enumerate_partitions


FIG1 = (4, 3, 3, 2, 2, 2)
BAD7 = (6, 6, 6, 1, 1, 0, 0)


def complete_graph(n):
    return SimpleGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def corrected_columns_by_hand(d):
    """Column sums of the corrected diagram, built cell by cell."""
    n = len(d)
    grid = [[1 if j < d[i] else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        if grid[i][i]:
            grid[i][i] = 0
            grid[i][d[i]] = 1
    return tuple(sum(grid[i][j] for i in range(n)) for j in range(n))


@st.composite
def degree_partitions(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    values = sorted(draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n)), reverse=True)
    return DegreePartition(tuple(values))


@st.composite
def dual_partitions(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    values = sorted(draw(st.lists(st.integers(0, n), min_size=n - 1, max_size=n - 1)), reverse=True)
    return DualDegreePartition(n, tuple(values))


class TestTypes:
    @pytest.mark.parametrize("bad", [(), (1, 2), (3, 0, 0), (1, 1, -1)])
    def test_degree_partition_rejects(self, bad):
        with pytest.raises(ValueError):
            DegreePartition(bad)

    def test_dual_partition_bounds(self):
        with pytest.raises(ValueError):
            DualDegreePartition(3, (4, 0))
        with pytest.raises(ValueError):
            DualDegreePartition(3, (0, 1))
        with pytest.raises(ValueError):
            DualDegreePartition(3, (1, 1, 0))
        assert DualDegreePartition(3, (3, 0)).expanded() == (3, 0, 0)

    def test_n_equals_one(self):
        d = DegreePartition((0,))
        assert conjugate(d) == DualDegreePartition(1, ())
        assert inverse_conjugate(DualDegreePartition(1, ())) == d
        assert corrected_conjugate(d) == (0,)
        assert berge_realizable(d)[0]
        assert realize(d) == SimpleGraph(1)

    def test_graph_rejects_loops_and_range(self):
        with pytest.raises(ValueError):
            SimpleGraph(3, frozenset({(2, 2)}))
        with pytest.raises(ValueError):
            SimpleGraph(3, frozenset({(1, 4)}))
        assert SimpleGraph(3, frozenset({(2, 1)})).edges == {(1, 2)}

    def test_edge_list_round_trip(self):
        g = realize(FIG1)
        text = g.to_edge_list()
        assert SimpleGraph.from_edge_list(text, n=6) == g
        with pytest.raises(ValueError):
            SimpleGraph.from_edge_list("1-2\n2-1\n")
        with pytest.raises(ValueError):
            SimpleGraph.from_edge_list("1:2\n")


class TestDegreePartitionOf:
    def test_edgeless(self):
        assert degree_partition_of(SimpleGraph(4)).values == (0, 0, 0, 0)

    def test_complete(self):
        assert degree_partition_of(complete_graph(4)).values == (3, 3, 3, 3)

    def test_figure_partition(self):
        assert degree_partition_of(realize(FIG1)).values == FIG1


class TestConjugate:
    def test_figure(self):
        assert conjugate(FIG1).values == (6, 6, 3, 1, 0)

    def test_empty(self):
        assert conjugate((0,) * 5).values == (0,) * 4

    def test_counterexample_partition(self):
        assert conjugate(BAD7).values == (5, 3, 3, 3, 3, 3)

    def test_inverse_examples(self):
        assert inverse_conjugate(DualDegreePartition(6, (6, 6, 3, 1, 0))).values == FIG1
        assert inverse_conjugate(DualDegreePartition(4, (0, 0, 0))).values == (0, 0, 0, 0)
        assert inverse_conjugate((5, 3, 3, 3, 3, 3)).values == BAD7

    def test_inverse_rejects_invalid(self):
        with pytest.raises(ValueError):
            inverse_conjugate((3, 4, 0))
        with pytest.raises(ValueError):
            inverse_conjugate((8, 0, 0), n=4)

    @given(degree_partitions())
    def test_involution_from_degrees(self, d):
        assert inverse_conjugate(conjugate(d)) == d

    @given(dual_partitions())
    def test_involution_from_duals(self, x):
        assert conjugate(inverse_conjugate(x)) == x

    @given(degree_partitions())
    def test_sum_preserved(self, d):
        total = sum(d.values)
        assert sum(conjugate(d).expanded()) == total
        assert sum(corrected_conjugate(d)) == total


class TestCorrectedConjugate:
    def test_figure(self):
        assert corrected_conjugate(FIG1) == (5, 5, 2, 3, 1, 0)

    def test_empty(self):
        assert corrected_conjugate((0, 0, 0)) == (0, 0, 0)

    def test_counterexample_partition(self):
        assert corrected_columns_by_hand(BAD7) == (4, 2, 2, 3, 3, 3, 3)
        assert corrected_conjugate(BAD7) == (4, 2, 2, 3, 3, 3, 3)

    def test_matches_diagram_exhaustively(self):
        for n in range(1, 9):
            for values in enumerate_partitions(n):
                cbar = corrected_conjugate(values)
                assert cbar == corrected_columns_by_hand(values), values
                assert all(0 <= v <= n - 1 for v in cbar)

    def test_ferrers_matrix_sums(self):
        plain = ferrers_matrix(FIG1)
        assert [sum(r) for r in plain] == list(FIG1)
        assert [sum(col) for col in zip(*plain)] == [6, 6, 3, 1, 0, 0]
        fixed = ferrers_matrix(FIG1, corrected=True)
        assert fixed[0] == [0, 1, 1, 1, 1, 0]
        assert [sum(r) for r in fixed] == list(FIG1)


class TestMajorize:
    def test_reflexive(self):
        r = majorize((3, 1, 2), (3, 1, 2))
        assert r.slacks == (0, 0, 0) and r.majorizes

    def test_figure_slacks(self):
        r = majorize((5, 5, 2, 3, 1, 0), FIG1)
        assert r.slacks == (1, 3, 3, 3, 2, 0)
        assert r.majorizes

    def test_counterexample_slack(self):
        r = majorize(corrected_conjugate(BAD7), BAD7)
        assert r.slacks[0] == -2
        assert not r.majorizes
        assert r.first_violation == 1

    def test_does_not_mutate(self):
        a = [1, 3, 2]
        b = [2, 2, 2]
        majorize(a, b)
        assert a == [1, 3, 2] and b == [2, 2, 2]

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            majorize((1, 2), (1,))

    def test_keep_order(self):
        cbar = (6, 2, 2, 3, 3, 0, 0)
        d = (4, 4, 4, 1, 1, 1, 1)
        assert majorize(cbar, d).majorizes
        ordered = majorize(cbar, d, keep_order=True)
        assert not ordered.majorizes
        assert ordered.first_violation == 3 and ordered.slacks[2] == -2

    def test_total_mismatch(self):
        r = majorize((3, 3), (3, 2))
        assert not r.majorizes and r.first_violation == 2

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=8))
    def test_reflexive_property(self, a):
        assert majorize(a, a).majorizes
        assert majorize(a, list(reversed(a))).majorizes

    @given(st.data())
    def test_antisymmetric(self, data):
        n = data.draw(st.integers(1, 6))
        a = data.draw(st.lists(st.integers(0, 6), min_size=n, max_size=n))
        b = data.draw(st.lists(st.integers(0, 6), min_size=n, max_size=n))
        if majorize(a, b).majorizes and majorize(b, a).majorizes:
            assert sorted(a) == sorted(b)


class TestBerge:
    def test_figure_realizable(self):
        ok, report = berge_realizable(FIG1)
        assert ok
        assert report.slacks[-1] == 0

    def test_counterexample(self):
        ok, report = berge_realizable(BAD7)
        assert not ok
        assert report.slacks[0] == -2

    @pytest.mark.parametrize("n", range(1, 10))
    def test_constant_even(self, n):
        for two_k in range(0, n, 2):
            assert berge_realizable((two_k,) * n)[0]

    def test_odd_sum_rejected(self):
        assert not berge_realizable((1, 0, 0))[0]

    def test_sorted_comparison_would_be_too_weak(self):
        # passes with a sorted corrected conjugate but has no realization
        d = (4, 4, 4, 1, 1, 1, 1)
        assert majorize(corrected_conjugate(d), d).majorizes
        assert not berge_realizable(d)[0]
        assert not nx.is_graphical(list(d))

    @pytest.mark.parametrize("n", range(1, 10))
    def test_agrees_with_erdos_gallai(self, n):
        for values in enumerate_partitions(n):
            assert berge_realizable(values)[0] == nx.is_graphical(list(values)), values


class TestRealize:
    def test_edgeless(self):
        assert realize((0, 0, 0)) == SimpleGraph(3)

    def test_complete(self):
        assert realize((3, 3, 3, 3)) == complete_graph(4)

    def test_not_realizable(self):
        with pytest.raises(NotRealizable) as info:
            realize(BAD7)
        assert not info.value.odd_sum
        assert info.value.slack_index == 1
        assert info.value.slack == -2
        assert "slack -2 at k=1" in str(info.value)

    def test_odd_sum_flag(self):
        with pytest.raises(NotRealizable) as info:
            realize((2, 1, 0))
        assert info.value.odd_sum

    def test_deterministic(self):
        assert realize(FIG1) == realize(FIG1)
        assert realize((2, 2, 2, 2)).edges == {(1, 2), (1, 3), (2, 4), (3, 4)}

    def test_round_trip_exhaustive(self):
        for n in range(1, 9):
            for values in enumerate_partitions(n):
                ok = berge_realizable(values)[0]
                if ok:
                    assert degree_partition_of(realize(values)).values == values
                else:
                    with pytest.raises(NotRealizable):
                        realize(values)


class TestAlternatingSum:
    def test_figure(self):
        x = conjugate(FIG1)
        assert odd_degree_alternating_sum(x) == 2
        assert sum(v % 2 for v in FIG1) == 2

    def test_zero(self):
        assert odd_degree_alternating_sum(DualDegreePartition(5, (0, 0, 0, 0))) == 0

    def test_b_point(self):
        x = DualDegreePartition(7, (7, 7, 6, 0, 0, 0))
        assert odd_degree_alternating_sum(x) == 6
        d = inverse_conjugate(x)
        assert d.values == (3, 3, 3, 3, 3, 3, 2)
        assert sum(v % 2 for v in d.values) == 6

    def test_random_graphs(self):
        rng = random.Random(20061121)
        for _ in range(1000):
            n = rng.randint(1, 12)
            p = rng.random()
            edges = {(i, j) for i, j in combinations(range(1, n + 1), 2) if rng.random() < p}
            g = SimpleGraph(n, frozenset(edges))
            odd = sum(v % 2 for v in g.degrees())
            alt = odd_degree_alternating_sum(conjugate(degree_partition_of(g)))
            assert alt == odd
            assert alt % 2 == 0


class TestRender:
    def _grid(self, text):
        lines = text.splitlines()
        header = [int(v) for v in lines[0].split("|")[1].split()]
        rows = [[int(v) for v in line.split("|")[1].split()] for line in lines[2:]]
        labels = [int(line.split("|")[0]) for line in lines[2:]]
        return header, labels, rows

    def test_plain(self):
        header, labels, rows = self._grid(render_ferrers(FIG1))
        assert header == [6, 6, 3, 1, 0, 0]
        assert labels == list(FIG1)
        assert [sum(c) for c in zip(*rows)] == header

    def test_corrected(self):
        header, labels, rows = self._grid(render_ferrers(FIG1, corrected=True))
        assert header == [5, 5, 2, 3, 1, 0]
        assert rows[1] == [1, 0, 1, 1, 0, 0]

    @pytest.mark.parametrize("corrected", [False, True])
    def test_zero(self, corrected):
        header, labels, rows = self._grid(render_ferrers((0, 0), corrected))
        assert rows == [[0, 0], [0, 0]]


class TestParse:
    def test_parse(self):
        assert parse_sequence("4,3, 3,2") == (4, 3, 3, 2)
        assert parse_sequence("") == ()

    def test_bad_token(self):
        with pytest.raises(ValueError, match="'x'"):
            parse_sequence("4,x,3")


@settings(max_examples=50)
@given(degree_partitions(max_n=9))
def test_realize_matches_berge(d):
    ok = berge_realizable(d)[0]
    try:
        g = realize(d)
    except NotRealizable:
        assert not ok
    else:
        assert ok and degree_partition_of(g) == d
