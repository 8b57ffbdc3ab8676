import pytest

from radiohamming import (
    HammingGraph,
    SolverConfig,
    SolverError,
    jump_lower_bound,
    max_consecutive_run,
    minimal_remaining_increment,
    radio_number_formula,
    solve,
    validate,
)

import oracles

# every Hamming graph on at most 8 vertices (up to factor reordering)
GRAPHS_UP_TO_8 = [
    (2,), (3,), (4,), (5,), (6,), (7,), (8,),
    (2, 2), (2, 3), (2, 4), (2, 2, 2),
]

GRAPHS_UP_TO_12 = GRAPHS_UP_TO_8 + [(9,), (10,), (11,), (12,), (2, 5), (2, 6), (3, 3), (3, 4), (2, 2, 3)]


class TestMinimalRemainingIncrement:
    def test_pinned_values(self):
        assert minimal_remaining_increment(18, 6) == 19
        assert minimal_remaining_increment(1, 1) == 0
        assert minimal_remaining_increment(1, 99) == 0

    @pytest.mark.parametrize("n", range(1, 8))
    def test_two_run_family(self, n):
        assert minimal_remaining_increment(4 * n, 2) == 6 * n - 2

    def test_consistent_with_jump_lower_bound(self):
        # from label 1 the increment bound reproduces the rn bound
        for count, run in [(18, 6), (8, 2), (12, 2), (5, 5)]:
            assert 1 + minimal_remaining_increment(count, run) == jump_lower_bound(count, run)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            minimal_remaining_increment(0, 2)
        with pytest.raises(ValueError):
            minimal_remaining_increment(4, 0)


class TestSolveExactValues:
    @pytest.mark.parametrize(
        "sizes,expected",
        [
            ((2, 3, 3), 20),
            ((2, 2, 2), 11),
            ((2, 2, 3), 17),
            ((2, 2, 4), 23),
            ((2, 2), 5),
        ],
    )
    def test_certified_exceptional_instances(self, sizes, expected):
        result = solve(HammingGraph(sizes))
        assert result.optimal
        assert result.rn == expected
        report = validate(HammingGraph(sizes), result.witness)
        assert report.valid
        assert report.span == expected

    def test_single_vertex(self):
        result = solve(HammingGraph((1,)))
        assert result.rn == 1
        assert result.optimal

    def test_complete_graph_short_circuits(self):
        result = solve(HammingGraph((7,)))
        assert result.rn == 7
        assert result.optimal
        assert result.nodes_explored == 0

    def test_trivial_factors_are_ignored(self):
        result = solve(HammingGraph((2, 1, 2)))
        assert result.optimal
        assert result.rn == 5


class TestSolveAgainstEnumeration:
    @pytest.mark.parametrize("sizes", GRAPHS_UP_TO_8)
    def test_matches_naive_enumeration(self, sizes):
        expected = oracles.naive_radio_number(sizes)
        result = solve(HammingGraph(sizes))
        assert result.optimal
        assert result.rn == expected


class TestSolverInvariants:
    @pytest.mark.parametrize("sizes", GRAPHS_UP_TO_12)
    def test_symmetry_reduction_changes_nothing(self, sizes):
        g = HammingGraph(sizes)
        with_sym = solve(g)
        without = solve(g, SolverConfig(symmetry_reduction=False))
        assert with_sym.optimal and without.optimal
        assert with_sym.rn == without.rn

    @pytest.mark.parametrize("sizes", [(2, 2, 2), (2, 3, 3), (3, 3), (2, 2, 4)])
    def test_formula_agreement_where_applicable(self, sizes):
        g = HammingGraph(sizes)
        result = solve(g)
        if len(sizes) == 3:
            assert result.rn == radio_number_formula(*sorted(sizes)).value

    @pytest.mark.parametrize("sizes", [(2, 2), (2, 2, 2), (2, 3, 3), (2, 2, 5)])
    def test_run_bound_never_exceeds_rn(self, sizes):
        g = HammingGraph(sizes)
        run = max_consecutive_run(g)
        result = solve(g)
        assert result.optimal
        assert jump_lower_bound(g.vertex_count, run) <= result.rn

    def test_budget_exhaustion_returns_valid_incumbent(self):
        g = HammingGraph((2, 2, 2, 2))
        result = solve(g, SolverConfig(node_budget=200))
        assert not result.optimal
        report = validate(g, result.witness)
        assert report.valid
        assert report.span == result.rn

    def test_loose_user_bound_keeps_answer(self):
        result = solve(HammingGraph((3, 3)), SolverConfig(initial_upper_bound=40))
        assert result.optimal
        assert result.rn == 9

    def test_tight_user_bound_raises_without_witness(self):
        with pytest.raises(SolverError):
            solve(HammingGraph((3, 3)), SolverConfig(initial_upper_bound=9))

    def test_rejects_bad_budgets(self):
        with pytest.raises(ValueError):
            SolverConfig(node_budget=0)
        with pytest.raises(ValueError):
            SolverConfig(time_budget=0)
