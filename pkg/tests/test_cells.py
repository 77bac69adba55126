"""Tests for the corner-cut cell complex and its resolution."""
from itertools import product

import pytest
import yaml

from tetcurves.common.exceptions import NotSMinimalError
from tetcurves.curve.cells import (
    betti_numbers,
    buchsbaum_cell_predicate,
    cell_complex,
    cellular_betti,
    cellular_differentials,
    forbidden_patterns,
    hilbert_function_from_resolution,
    is_chain_complex,
    minimal_generators,
    resolution_document,
    square_boundary,
)
from tetcurves.curve.invariants import enumerate_minimal
from tetcurves.curve.weights import is_s_minimal
from tetcurves.oracle.betti import graded_betti, multigraded_betti
from tetcurves.oracle.hilbert import hilbert_series_values
from tetcurves.oracle.ideals import tetrahedral_ideal
from tetcurves.oracle.monomials import Monomial


def m(a=0, b=0, c=0, d=0):
    return Monomial((a, b, c, d))


def _minimal_vectors(bound):
    for w in product(range(bound + 1), repeat=6):
        if any(w) and is_s_minimal(w):
            yield w


class TestGenerators:
    def test_skew_lines(self):
        generators = minimal_generators((1, 0, 0, 0, 0, 1))
        assert set(generators) == {m(a=1, c=1), m(a=1, d=1), m(b=1, c=1), m(b=1, d=1)}

    def test_permuted_back_to_source_variables(self):
        generators = minimal_generators((0, 1, 0, 0, 1, 0))
        assert set(generators) == {m(a=1, b=1), m(a=1, d=1), m(b=1, c=1), m(c=1, d=1)}

    def test_count_and_degree(self):
        generators = minimal_generators((3, 1, 1, 1, 1, 4))
        assert len(generators) == 16
        assert {g.degree for g in generators} == {7}

    @pytest.mark.parametrize('w', [(1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 0, 0), (4, 2, 2, 1, 1, 4)])
    def test_rejects_non_minimal(self, w):
        with pytest.raises(NotSMinimalError) as excinfo:
            minimal_generators(w)
        assert '--oracle' in str(excinfo.value)

    def test_matches_oracle_small(self):
        for w in _minimal_vectors(2):
            assert minimal_generators(w) == tetrahedral_ideal(w), w

    @pytest.mark.slow
    def test_matches_oracle_up_to_four(self):
        for w in _minimal_vectors(4):
            assert minimal_generators(w) == tetrahedral_ideal(w), w


class TestCellComplex:
    @pytest.mark.parametrize('w, counts', [
        ((1, 0, 0, 0, 0, 1), (4, 4, 1)),
        ((3, 1, 1, 1, 1, 4), (16, 23, 8)),
        ((2, 0, 0, 0, 0, 3), (12, 17, 6)),
        ((2, 1, 0, 0, 1, 2), (7, 8, 2)),
    ])
    def test_face_counts(self, w, counts):
        assert cell_complex(w).face_counts == counts

    def test_full_grid_without_middle_weights(self):
        complex_ = cell_complex((2, 0, 0, 0, 0, 3))
        assert set(complex_.vertices) == {(i, j) for i in range(4) for j in range(3)}

    def test_corner_cut_squares(self):
        corners = {square[0] for square in cell_complex((2, 1, 0, 0, 1, 3)).facets}
        assert corners == {(0, 0), (1, 1), (1, 0), (2, 1)}

    def test_vertex_labels(self):
        complex_ = cell_complex((3, 1, 1, 1, 1, 4))
        assert complex_.label((1, 2)) == m(a=2, b=1, c=3, d=1)

    def test_label_degrees(self):
        for w in [(1, 0, 0, 0, 0, 1), (3, 1, 1, 1, 1, 4), (2, 1, 0, 0, 1, 3), (0, 2, 1, 1, 3, 0)]:
            complex_ = cell_complex(w)
            for dim in range(3):
                for face in complex_.faces(dim):
                    assert complex_.label(face).degree == complex_.shift + dim

    def test_every_edge_bounds_a_square(self):
        for w in [(3, 1, 1, 1, 1, 4), (2, 1, 0, 0, 1, 3), (4, 1, 2, 1, 1, 5)]:
            complex_ = cell_complex(w)
            assert all(complex_.facets_containing(edge) for edge in complex_.edges)

    def test_face_counts_match_betti_numbers(self):
        for m_ in range(1, 5):
            for w in enumerate_minimal(m_):
                assert cell_complex(w).face_counts == betti_numbers(w).ranks_up_to(3), w

    @pytest.mark.slow
    def test_face_counts_and_euler_up_to_six(self):
        for w in _minimal_vectors(6):
            ranks = betti_numbers(w).ranks_up_to(3)
            assert cell_complex(w).face_counts == ranks, w
            assert ranks[0] - ranks[1] + ranks[2] == 1, w


class TestBettiNumbers:
    def test_skew_lines(self):
        assert betti_numbers((1, 0, 0, 0, 0, 1)).entries == {(1, 2): 4, (2, 3): 4, (3, 4): 1}

    def test_corner_cut(self):
        table = betti_numbers((3, 1, 1, 1, 1, 4))
        assert table.rows() == [(1, 7, 16), (2, 8, 23), (3, 9, 8)]
        assert table.is_linear()

    def test_trivial_curve_is_rejected(self):
        with pytest.raises(NotSMinimalError):
            betti_numbers((0, 0, 0, 0, 0, 0))

    def test_matches_oracle(self):
        for w in [(1, 0, 0, 0, 0, 1), (1, 0, 0, 0, 0, 2), (2, 1, 0, 0, 1, 2), (2, 0, 1, 0, 0, 2)]:
            assert graded_betti(tetrahedral_ideal(w)) == betti_numbers(w), w
            assert multigraded_betti(tetrahedral_ideal(w)) == cellular_betti(w), w

    @pytest.mark.slow
    def test_matches_oracle_up_to_two(self):
        for w in _minimal_vectors(2):
            oracle = graded_betti(tetrahedral_ideal(w))
            assert oracle == betti_numbers(w), w
            assert oracle.is_linear(), w

    def test_hilbert_function_from_resolution(self):
        assert [hilbert_function_from_resolution((1, 0, 0, 0, 0, 1), t) for t in range(5)] == [1, 4, 6, 8, 10]
        for w in [(3, 1, 1, 1, 1, 4), (2, 1, 0, 0, 1, 3)]:
            expected = hilbert_series_values(tetrahedral_ideal(w), 12)
            assert [hilbert_function_from_resolution(w, t) for t in range(13)] == expected


class TestDifferentials:
    def test_single_square(self):
        phi1, phi2 = cellular_differentials((1, 0, 0, 0, 0, 1))
        assert phi1.shape == (4, 4)
        assert phi2.shape == (4, 1)
        column = phi2.column(0)
        assert [column[row][1] for row in range(4)] == [m(a=1), m(d=1), m(b=1), m(c=1)]
        assert sum(sign for sign, _ in column.values()) == 0
        assert is_chain_complex(phi1, phi2)

    def test_edge_columns(self):
        phi1, _ = cellular_differentials((3, 1, 1, 1, 1, 4))
        for index in range(phi1.shape[1]):
            column = phi1.column(index)
            assert sorted(sign for sign, _ in column.values()) == [-1, 1]
            assert all(monomial.degree == 1 for _, monomial in column.values())

    def test_two_squares(self):
        _, phi2 = cellular_differentials((2, 0, 0, 0, 0, 1))
        assert phi2.shape[1] == 2
        assert all(len(phi2.column(index)) == 4 for index in range(2))

    def test_square_boundary_order(self):
        square = ((0, 0), (1, 0), (1, 1), (0, 1))
        assert square_boundary(square) == (((0, 0), (1, 0)), ((1, 0), (1, 1)), ((0, 1), (1, 1)), ((0, 0), (0, 1)))

    def test_chain_complex(self):
        for w in [(3, 1, 1, 1, 1, 4), (2, 1, 0, 0, 1, 3), (0, 2, 1, 1, 3, 0), (4, 1, 2, 1, 1, 5)]:
            assert is_chain_complex(*cellular_differentials(w)), w

    @pytest.mark.slow
    def test_chain_complex_up_to_six(self):
        for m_ in range(1, 7):
            for w in enumerate_minimal(m_):
                assert is_chain_complex(*cellular_differentials(w)), w


class TestPredicates:
    @pytest.mark.parametrize('w, expected', [
        ((1, 0, 0, 0, 0, 1), True),
        ((2, 0, 0, 0, 0, 2), False),
        ((2, 1, 0, 0, 1, 2), True),
    ])
    def test_buchsbaum_cell_predicate(self, w, expected):
        assert buchsbaum_cell_predicate(w) is expected

    @pytest.mark.parametrize('w, expected', [
        ((2, 0, 0, 0, 0, 2), (False, True)),
        ((1, 0, 0, 0, 0, 3), (True, False)),
        ((3, 0, 0, 0, 0, 1), (True, False)),
        ((1, 0, 0, 0, 0, 1), (False, False)),
    ])
    def test_forbidden_patterns(self, w, expected):
        assert forbidden_patterns(w) == expected


class TestExport:
    def test_resolution_document(self):
        document = resolution_document((1, 0, 0, 0, 0, 1))
        assert document['weights'] == [1, 0, 0, 0, 0, 1]
        assert document['shift'] == 2
        assert [module['rank'] for module in document['modules']] == [4, 4, 1]
        assert [module['twist'] for module in document['modules']] == [-2, -3, -4]
        assert [entry['value'] for entry in document['differentials']['phi2'][0]] == ['a', '-d', '-b', 'c']
        assert len(document['bases']['edges']) == 4
        assert yaml.safe_load(yaml.safe_dump(document)) == document
