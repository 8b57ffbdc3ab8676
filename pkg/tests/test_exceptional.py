import pytest

from radiohamming import (
    FormulaDomainError,
    HammingGraph,
    RunSearchBudgetError,
    jump_lower_bound,
    labeling_22n,
    labeling_233,
    max_consecutive_run,
    ordering_22n,
    ordering_233,
    radio_number_formula,
    span_of_ordering,
    validate,
)

import oracles


def graph_22n(n):
    return HammingGraph((2, 2) if n == 1 else (2, 2, n))


def tight_labels(count):
    """First `count` positive integers not divisible by 3."""
    labels = []
    value = 0
    while len(labels) < count:
        value += 1
        if value % 3:
            labels.append(value)
    return labels


class TestFormula:
    def test_exceptional_values(self):
        assert radio_number_formula(2, 3, 3).value == 20
        assert radio_number_formula(2, 3, 3).case_tag == "two_three_three"
        assert radio_number_formula(2, 2, 5).value == 29
        assert radio_number_formula(2, 2, 5).case_tag == "two_two_n"

    def test_graceful_value_is_vertex_count(self):
        result = radio_number_formula(3, 3, 6)
        assert result.value == 54
        assert result.case_tag == "graceful"

    def test_degenerate_two_two_one(self):
        result = radio_number_formula(2, 2, 1)
        assert result.value == 5
        assert result.case_tag == "two_two_n"

    def test_rejects_unsorted_or_small(self):
        with pytest.raises(FormulaDomainError):
            radio_number_formula(3, 2, 3)
        with pytest.raises(FormulaDomainError):
            radio_number_formula(1, 3, 3)
        with pytest.raises(FormulaDomainError):
            radio_number_formula(2, 3, 1)


class TestLabeling233:
    def test_pinned_entries(self):
        lab = labeling_233()
        assert lab[(1, 1, 1)] == 1
        assert lab[(2, 3, 2)] == 20
        assert lab[(1, 1, 2)] == 8

    def test_valid_with_span_20(self):
        report = validate(HammingGraph((2, 3, 3)), labeling_233())
        assert report.valid
        assert report.span == 20

    def test_ordering_233_is_label_order(self):
        lab = labeling_233()
        order = ordering_233()
        assert [lab[v] for v in order] == sorted(lab.values())


class TestLabeling22n:
    def test_n1_square(self):
        lab = labeling_22n(1)
        assert lab == {(1, 1): 1, (2, 2): 2, (2, 1): 4, (1, 2): 5}
        report = validate(HammingGraph((2, 2)), lab)
        assert report.valid
        assert report.span == 5

    def test_n2_order_and_labels(self):
        order = ordering_22n(2)
        assert order == [
            (1, 1, 1), (2, 2, 2), (2, 1, 1), (1, 2, 2),
            (2, 1, 2), (1, 2, 1), (1, 1, 2), (2, 2, 1),
        ]
        lab = labeling_22n(2)
        assert [lab[v] for v in order] == [1, 2, 4, 5, 7, 8, 10, 11]
        assert validate(HammingGraph((2, 2, 2)), lab).span == 11

    def test_n3_labels_and_ending(self):
        order = ordering_22n(3)
        lab = labeling_22n(3)
        assert [lab[v] for v in order] == [1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17]
        assert order[-1] == (1, 2, 3)
        assert validate(HammingGraph((2, 2, 3)), lab).valid

    def test_n4_append_block(self):
        order = ordering_22n(4)
        assert order[:8] == ordering_22n(2)
        assert order[8:] == [
            (1, 1, 3), (2, 2, 4), (2, 1, 3), (1, 2, 4),
            (2, 1, 4), (1, 2, 3), (1, 1, 4), (2, 2, 3),
        ]
        lab = labeling_22n(4)
        assert [lab[v] for v in order[8:]] == [13, 14, 16, 17, 19, 20, 22, 23]
        report = validate(HammingGraph((2, 2, 4)), lab)
        assert report.valid
        assert report.span == 23

    @pytest.mark.parametrize("n", range(1, 51))
    def test_valid_with_span_6n_minus_1(self, n):
        report = validate(graph_22n(n), labeling_22n(n))
        assert report.valid
        assert report.span == 6 * n - 1

    @pytest.mark.parametrize("n", [2, 4, 6, 7, 9, 12, 25])
    def test_even_style_ending_from_n4_on(self, n):
        # n = 3 is the only odd-style ending; one append normalizes it
        order = ordering_22n(n)
        if n == 3:
            assert order[-1] == (1, 2, 3)
        else:
            assert order[-2:] == [(1, 1, n), (2, 2, n - 1)]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 11])
    def test_greedy_reproduces_the_tight_labels(self, n):
        g = graph_22n(n)
        order = ordering_22n(n)
        labeling, span = span_of_ordering(g, order)
        assert span == 6 * n - 1
        assert [labeling[v] for v in order] == tight_labels(4 * n)
        assert labeling == labeling_22n(n)

    def test_rejects_n_below_one(self):
        with pytest.raises(FormulaDomainError):
            labeling_22n(0)


class TestMaxConsecutiveRun:
    def test_233_admits_six_but_not_seven(self):
        assert max_consecutive_run(HammingGraph((2, 3, 3))) == 6

    @pytest.mark.parametrize("n", range(2, 7))
    def test_22n_admits_two_but_not_three(self, n):
        assert max_consecutive_run(HammingGraph((2, 2, n))) == 2

    def test_complete_graph_runs_everything(self):
        assert max_consecutive_run(HammingGraph((3,))) == 3

    def test_matches_plain_search_on_small_graphs(self):
        for sizes in [(2, 2), (2, 3), (2, 2, 2), (2, 2, 3), (3, 3)]:
            assert max_consecutive_run(HammingGraph(sizes)) == oracles.naive_max_run(sizes)

    def test_budget_error_carries_best_bound(self):
        with pytest.raises(RunSearchBudgetError) as err:
            max_consecutive_run(HammingGraph((3, 3, 3)), cap=10)
        assert err.value.best_found >= 1

    def test_rejects_bad_cap(self):
        with pytest.raises(ValueError):
            max_consecutive_run(HammingGraph((2, 2)), cap=0)


class TestJumpLowerBound:
    def test_pinned_values(self):
        assert jump_lower_bound(18, 6) == 20
        assert jump_lower_bound(5, 5) == 5

    @pytest.mark.parametrize("n", range(1, 10))
    def test_two_run_family(self, n):
        assert jump_lower_bound(4 * n, 2) == 6 * n - 1

    def test_rejects_bad_run_length(self):
        with pytest.raises(ValueError):
            jump_lower_bound(5, 0)
        with pytest.raises(ValueError):
            jump_lower_bound(5, 6)
