"""Tests for weight vectors, symmetries and facet reductions."""
import logging
from itertools import product
from math import comb

import pytest

from tetcurves.common.exceptions import InvalidReductionError, TetInputError
from tetcurves.curve.weights import (
    WeightVector,
    act,
    applicable_reductions,
    apply_reduction,
    canonical_form,
    canonicalize,
    facet_weights,
    is_s_minimal,
    max_line,
    minimal_results_all_choices,
    orbit,
    parse_weight_vector,
    reduce_to_minimal,
    symmetries,
    tie_break_invariant,
)
from tetcurves.oracle.monomials import Monomial

SAMPLES = [
    (0, 0, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 1),
    (4, 2, 2, 1, 1, 4),
    (3, 1, 1, 1, 1, 4),
    (5, 1, 3, 2, 2, 5),
    (6, 0, 8, 1, 0, 4),
    (2, 0, 0, 1, 1, 2),
    (1, 2, 3, 0, 4, 1),
]


def _degree(w):
    return sum(comb(a + 1, 2) for a in w)


class TestWeightVector:
    def test_accepts_six_non_negative_integers(self):
        w = WeightVector([5, 1, 3, 2, 2, 5])
        assert w == (5, 1, 3, 2, 2, 5)
        assert w.weight(1) == 5
        assert w.weight(6) == 5

    @pytest.mark.parametrize('bad', [(1, 2, 3), (1, 2, 3, 4, 5, 6, 7), (1, -1, 0, 0, 0, 0), (1.0, 0, 0, 0, 0, 0),
                                     (True, 0, 0, 0, 0, 0)])
    def test_rejects_malformed(self, bad):
        with pytest.raises(TetInputError):
            WeightVector(bad)

    def test_trivial(self):
        assert WeightVector((0,) * 6).is_trivial
        assert not WeightVector((0, 0, 0, 0, 0, 1)).is_trivial

    def test_large_entries_are_exact(self):
        w = WeightVector((10 ** 6,) * 6)
        assert facet_weights(w) == (3 * 10 ** 6,) * 4


class TestParse:
    @pytest.mark.parametrize('text', ['5,1,3,2,2,5', '[5, 1, 3, 2, 2, 5]', '(5,1,3,2,2,5)', ' 5 1 3 2 2 5 ',
                                      '5, 1,3 ,2,2,5'])
    def test_accepted_forms(self, text):
        assert parse_weight_vector(text) == (5, 1, 3, 2, 2, 5)

    @pytest.mark.parametrize('text', ['', '1,2,3', '1,-2,3,4,5,6', 'a,b,c,d,e,f', '[1,2,3,4,5,6', '5,,1,3,2,2',
                                      '1,2,3,4,5,6,7', '(1,2,3,4,5,6]', '5,1,3,2,2,²',
                                      '٥,1,3,2,2,5'])
    def test_rejected_forms(self, text):
        with pytest.raises(TetInputError):
            parse_weight_vector(text)


class TestFacets:
    @pytest.mark.parametrize('w, expected', [
        ((0, 0, 0, 0, 0, 0), (0, 0, 0, 0)),
        ((4, 2, 2, 1, 1, 4), (8, 6, 7, 7)),
        ((1, 0, 1, 1, 0, 1), (2, 2, 2, 2)),
    ])
    def test_facet_weights(self, w, expected):
        assert facet_weights(w) == expected

    def test_applicable_reductions(self):
        assert 'A' in applicable_reductions((4, 2, 2, 1, 1, 4))
        assert 'A' in applicable_reductions((1, 0, 0, 0, 0, 0))
        assert applicable_reductions((3, 1, 1, 1, 1, 4)) == ()

    def test_applicable_reductions_rejects_zero_vector(self):
        with pytest.raises(TetInputError):
            applicable_reductions((0, 0, 0, 0, 0, 0))

    def test_apply_reduction_worked_example(self):
        step = apply_reduction((4, 2, 2, 1, 1, 4), 'A')
        assert step.after == (3, 1, 1, 1, 1, 4)
        assert step.F == Monomial((0, 4, 2, 2))
        assert step.G == 0
        assert step.facet.pivot_name == 'a'

    def test_apply_reduction_single_line(self):
        step = apply_reduction((1, 0, 0, 0, 0, 0), 'A')
        assert step.after == (0, 0, 0, 0, 0, 0)
        assert step.F == Monomial((0, 1, 0, 0))

    def test_apply_reduction_cycle(self):
        step = apply_reduction((1, 0, 1, 1, 0, 1), 'A')
        assert step.after == (0, 0, 0, 1, 0, 1)
        assert step.F == Monomial((0, 1, 0, 1))
        assert step.G == 0

    def test_apply_reduction_rejects_failed_system(self):
        with pytest.raises(InvalidReductionError) as excinfo:
            apply_reduction((0, 0, 0, 0, 0, 1), 'A')
        assert excinfo.value.facet == 'A'

    def test_apply_reduction_rejects_unknown_facet(self):
        with pytest.raises(TetInputError):
            apply_reduction((1, 0, 0, 0, 0, 0), 'E')

    def test_step_as_dict(self):
        step = apply_reduction((5, 1, 3, 2, 2, 5), 'D')
        assert step.as_dict() == {'facet': 'D', 'F': [3, 2, 5, 0], 'G': 'd', 'after': [5, 1, 2, 2, 1, 4]}


class TestMinimality:
    @pytest.mark.parametrize('w, expected', [
        ((4, 2, 2, 1, 1, 4), 1),
        ((6, 0, 8, 1, 0, 4), 3),
        ((0, 0, 0, 0, 0, 0), 1),
    ])
    def test_max_line(self, w, expected):
        assert max_line(w) == expected

    @pytest.mark.parametrize('w, expected', [
        ((3, 1, 1, 1, 1, 4), True),
        ((4, 2, 2, 1, 1, 4), False),
        ((5, 1, 3, 2, 2, 5), False),
        ((0, 0, 0, 0, 0, 0), True),
        ((1, 0, 0, 0, 0, 0), False),
        ((1, 0, 0, 0, 0, 1), True),
    ])
    def test_is_s_minimal(self, w, expected):
        assert is_s_minimal(w) is expected

    def test_criterion_matches_applicability(self):
        for w in product(range(5), repeat=6):
            if not any(w):
                continue
            assert is_s_minimal(w) == (applicable_reductions(w) == ()), w


class TestReduceToMinimal:
    def test_single_step_transcript(self):
        trace = reduce_to_minimal((5, 1, 3, 2, 2, 5))
        assert trace.result == (5, 1, 2, 2, 1, 4)
        assert trace.count == 1
        assert trace.steps[0].facet.tag == 'D'

    def test_ten_step_transcript(self):
        trace = reduce_to_minimal((6, 0, 8, 1, 0, 4))
        assert trace.result == (0, 0, 0, 0, 0, 0)
        assert trace.count == 10

    def test_worked_example(self):
        trace = reduce_to_minimal((4, 2, 2, 1, 1, 4))
        assert [step.facet.tag for step in trace.steps] == ['A']
        assert trace.result == (3, 1, 1, 1, 1, 4)

    def test_cycle_of_four_lines(self):
        trace = reduce_to_minimal((1, 0, 1, 1, 0, 1))
        assert [step.facet.tag for step in trace.steps] == ['A', 'C']
        assert trace.result == (0, 0, 0, 0, 0, 0)

    def test_trivial_curve_is_returned_unchanged(self):
        trace = reduce_to_minimal((0, 0, 0, 0, 0, 0))
        assert trace.count == 0
        assert trace.result == trace.start

    @pytest.mark.parametrize('w', SAMPLES)
    def test_trace_chains_and_keeps_degree(self, w):
        trace = reduce_to_minimal(w)
        previous = trace.start
        for step in trace.steps:
            assert step.before == previous
            assert sum(step.after) < sum(step.before)
            assert _degree(step.before) == _degree(step.after) + step.F.degree
            assert step.F.degree == sum(step.before.weight(line) for line in step.facet.reduced_lines)
            previous = step.after
        assert previous == trace.result
        assert is_s_minimal(trace.result)
        assert trace.count <= sum(w)


class TestSymmetries:
    def test_twenty_four_distinct_symmetries(self):
        assert len(set(symmetries())) == 24

    def test_symmetries_preserve_opposite_pairs(self):
        opposite = {frozenset((0, 5)), frozenset((1, 4)), frozenset((2, 3))}
        for symmetry in symmetries():
            images = {frozenset((symmetry[i], symmetry[5 - i])) for i in range(3)}
            assert images == opposite

    def test_orbits(self):
        assert orbit((0, 0, 0, 0, 0, 0)) == {(0, 0, 0, 0, 0, 0)}
        assert orbit((1, 0, 0, 0, 0, 1)) == {(1, 0, 0, 0, 0, 1), (0, 1, 0, 0, 1, 0), (0, 0, 1, 1, 0, 0)}
        assert orbit((1, 1, 1, 1, 1, 1)) == {(1, 1, 1, 1, 1, 1)}

    def test_canonicalize(self):
        assert canonicalize((0, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 0)
        assert canonicalize((2, 0, 0, 0, 0, 1)) == (1, 0, 0, 0, 0, 2)
        assert canonicalize((5, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 5)

    @pytest.mark.parametrize('w', SAMPLES)
    def test_canonical_form(self, w):
        canonical, permutation = canonical_form(w)
        assert canonical[5] == max(w)
        assert canonicalize(canonical) == canonical
        assert canonical in orbit(w)

    def test_canonical_vector_keeps_identity(self):
        assert canonical_form((3, 1, 1, 1, 1, 4))[1] == (0, 1, 2, 3)

    @pytest.mark.parametrize('w', SAMPLES)
    def test_equivariance(self, w):
        for symmetry in symmetries():
            image = act(symmetry, w)
            assert is_s_minimal(image) == is_s_minimal(w)
            assert sorted(facet_weights(image)) == sorted(facet_weights(w))


class TestTieBreaks:
    def test_all_choices_contain_fixed_choice(self):
        for w in SAMPLES:
            assert reduce_to_minimal(w).result in minimal_results_all_choices(w)

    def test_all_choices_of_minimal_curve(self):
        assert minimal_results_all_choices((3, 1, 1, 1, 1, 4)) == {(3, 1, 1, 1, 1, 4)}

    def test_report_small_vectors(self, caplog):
        caplog.set_level(logging.WARNING, logger='tetcurves.curve.weights')
        outcomes = [tie_break_invariant(w) for w in product(range(3), repeat=6)]
        # Report only: disagreements are logged
        assert len(outcomes) == 3 ** 6

    @pytest.mark.slow
    def test_report_all_vectors_up_to_three(self, caplog):
        caplog.set_level(logging.WARNING, logger='tetcurves.curve.weights')
        disagreements = [w for w in product(range(4), repeat=6) if not tie_break_invariant(w)]
        assert len(disagreements) == len([r for r in caplog.records if 'tie-break' in r.getMessage()])
