"""Cellular minimal free resolutions of S-minimal tetrahedral curves.

An S-minimal curve is brought to its canonical form (largest weight on
line 6).  Its minimal generators are then the monomials

    a^j b^(a1-j) c^(a6-i) d^i

at the lattice points (i, j) of a rectangle with corners cut off, and the
unit edges and squares of that region carry the first and second syzygies.
Grid coordinates always refer to the canonical form; monomials are reported
in the variables of the curve as given.
"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Dict, Iterable, List, Mapping, Tuple

import sympy

from tetcurves.common.exceptions import NotSMinimalError
from tetcurves.curve.weights import WeightVector, canonical_form, is_s_minimal
from tetcurves.oracle.betti import BettiTable
from tetcurves.oracle.monomials import Monomial, MonomialIdeal

LOG = logging.getLogger(__name__)

Vertex = Tuple[int, int]
Edge = Tuple[Vertex, Vertex]
Square = Tuple[Vertex, Vertex, Vertex, Vertex]


def require_s_minimal(w: Iterable[int], operation: str) -> WeightVector:
    """Return w as a WeightVector, rejecting trivial and non-S-minimal curves."""
    w = WeightVector(w)
    if w.is_trivial or not is_s_minimal(w):
        raise NotSMinimalError(w, operation)
    return w


@dataclass(frozen=True)
class CellComplex:
    """The labelled corner-cut grid of an S-minimal curve."""

    source_weights: WeightVector
    weights: WeightVector
    vertex_permutation: Tuple[int, ...]
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    facets: Tuple[Square, ...]
    labels: Mapping[tuple, Monomial] = field(repr=False)

    @property
    def shift(self) -> int:
        return self.weights[0] + self.weights[5]

    @property
    def face_counts(self) -> Tuple[int, int, int]:
        return (len(self.vertices), len(self.edges), len(self.facets))

    def faces(self, dim: int):
        return (self.vertices, self.edges, self.facets)[dim]

    def label(self, face) -> Monomial:
        return self.labels[face]

    def facets_containing(self, edge: Edge) -> List[Square]:
        return [square for square in self.facets if edge in square_boundary(square)]


def _in_region(weights, i, j):
    a1, a2, a3, a4, a5, a6 = weights
    return (0 <= i <= a6 and 0 <= j <= a1
            and a3 <= i + j <= a1 + a6 - a4
            and a5 - a1 <= i - j <= a6 - a2)


def _vertex_monomial(weights, vertex):
    i, j = vertex
    a1, a6 = weights[0], weights[5]
    return Monomial((j, a1 - j, a6 - i, i))


def square_boundary(square: Square) -> Tuple[Edge, Edge, Edge, Edge]:
    """Bottom, right, top and left edge of a unit square given counterclockwise from its SW corner."""
    sw, se, ne, nw = square
    return ((sw, se), (se, ne), (nw, ne), (sw, nw))


# Orientation: edges point East or North, squares run counterclockwise
_SQUARE_SIGNS = (1, 1, -1, -1)
_EDGE_SIGNS = (-1, 1)


def cell_complex(w: Iterable[int]) -> CellComplex:
    """Build the cell complex X of an S-minimal, non-trivial curve.

    Raises:
        NotSMinimalError: For trivial or non-S-minimal input
    """
    source = require_s_minimal(w, "cell_complex")
    weights, permutation = canonical_form(source)

    vertices = tuple((i, j) for i in range(weights[5] + 1) for j in range(weights[0] + 1)
                     if _in_region(weights, i, j))
    present = set(vertices)
    edges = []
    facets = []
    for i, j in vertices:
        if (i + 1, j) in present:
            edges.append(((i, j), (i + 1, j)))
        if (i, j + 1) in present:
            edges.append(((i, j), (i, j + 1)))
        square = ((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1))
        if all(corner in present for corner in square):
            facets.append(square)

    labels = {}
    for vertex in vertices:
        labels[vertex] = _vertex_monomial(weights, vertex).pulled_back(permutation)
    for face in edges + facets:
        label = labels[face[0]]
        for corner in face[1:]:
            label = label.lcm(labels[corner])
        labels[face] = label

    LOG.debug("cell complex of %s (canonical %s) has face counts %s",
              list(source), list(weights), (len(vertices), len(edges), len(facets)))
    return CellComplex(
        source_weights=source,
        weights=weights,
        vertex_permutation=permutation,
        vertices=vertices,
        edges=tuple(edges),
        facets=tuple(facets),
        labels=labels,
    )


def minimal_generators(w: Iterable[int]) -> MonomialIdeal:
    """The vertex monomials of the cell complex, in the variables of w."""
    complex_ = cell_complex(w)
    return MonomialIdeal(tuple(complex_.label(vertex) for vertex in complex_.vertices))


def _triangular(n):
    return n * (n + 1) // 2


def betti_numbers(w: Iterable[int]) -> BettiTable:
    """Graded Betti numbers from the closed formulas; the resolution is linear."""
    source = require_s_minimal(w, "betti_numbers")
    a1, a2, a3, a4, a5, a6 = canonical_form(source)[0]
    middle = sum(_triangular(a) for a in (a2, a3, a4, a5))
    shift = a1 + a6
    return BettiTable({
        (1, shift): (a1 + 1) * (a6 + 1) - middle,
        (2, shift + 1): 2 * a1 * a6 + a1 + a6 - 2 * middle,
        (3, shift + 2): a1 * a6 - middle,
    })


def cellular_betti(w: Iterable[int]) -> Dict[Tuple[int, Monomial], int]:
    """Count faces by (homological degree, label); i = dim + 1."""
    complex_ = cell_complex(w)
    counts = Counter()
    for dim in range(3):
        for face in complex_.faces(dim):
            counts[(dim + 1, complex_.label(face))] += 1
    return dict(counts)


@dataclass(frozen=True)
class MonomialMatrix:
    """A sparse matrix of signed monomials between two face bases."""

    rows: tuple
    columns: tuple
    entries: Mapping[Tuple[int, int], Tuple[int, Monomial]]

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), len(self.columns))

    def column(self, index: int) -> Dict[int, Tuple[int, Monomial]]:
        return {row: entry for (row, column), entry in self.entries.items() if column == index}

    def to_sympy(self) -> sympy.Matrix:
        matrix = sympy.zeros(*self.shape)
        for (row, column), (sign, monomial) in self.entries.items():
            matrix[row, column] = sign * monomial.as_expr()
        return matrix


def _boundary_matrix(complex_, rows, columns, boundary, signs):
    index = {face: row for row, face in enumerate(rows)}
    entries = {}
    for column, face in enumerate(columns):
        for part, sign in zip(boundary(face), signs):
            quotient = complex_.label(face).quotient(complex_.label(part))
            entries[(index[part], column)] = (sign, quotient)
    return MonomialMatrix(rows=tuple(rows), columns=tuple(columns), entries=entries)


def cellular_differentials(w: Iterable[int]) -> Tuple[MonomialMatrix, MonomialMatrix]:
    """Return (phi1, phi2): edges to vertices and squares to edges."""
    complex_ = cell_complex(w)
    phi1 = _boundary_matrix(complex_, complex_.vertices, complex_.edges, lambda edge: edge, _EDGE_SIGNS)
    phi2 = _boundary_matrix(complex_, complex_.edges, complex_.facets, square_boundary, _SQUARE_SIGNS)
    return phi1, phi2


def is_chain_complex(phi1: MonomialMatrix, phi2: MonomialMatrix) -> bool:
    """True when phi1 * phi2 vanishes identically."""
    if not phi1.shape[1] or not phi2.shape[1]:
        return True
    product = (phi1.to_sympy() * phi2.to_sympy()).applyfunc(sympy.expand)
    return product.is_zero_matrix


def buchsbaum_cell_predicate(w: Iterable[int]) -> bool:
    """True when every edge bounds exactly one square."""
    complex_ = cell_complex(w)
    incidences = Counter(edge for square in complex_.facets for edge in square_boundary(square))
    return all(incidences[edge] == 1 for edge in complex_.edges)


def forbidden_patterns(w: Iterable[int]) -> Tuple[bool, bool]:
    """Return (three squares in a row, a 2x2 block of squares)."""
    corners = {square[0] for square in cell_complex(w).facets}
    three_in_row = any(
        {(i + 1, j), (i + 2, j)} <= corners or {(i, j + 1), (i, j + 2)} <= corners
        for i, j in corners
    )
    square_2x2 = any({(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= corners for i, j in corners)
    return three_in_row, square_2x2


def _binomial3(n):
    return comb(n, 3) if n >= 3 else 0


def hilbert_function_from_resolution(w: Iterable[int], t: int) -> int:
    """HF(t) of the coordinate ring, read off the linear resolution."""
    table = betti_numbers(w)
    shift = min(table.degrees(1))
    beta1, beta2, beta3 = table.ranks_up_to(3)
    return (_binomial3(t + 3) - beta1 * _binomial3(t - shift + 3)
            + beta2 * _binomial3(t - shift + 2) - beta3 * _binomial3(t - shift + 1))


def _signed(sign, monomial):
    return str(sign * monomial.as_expr())


def _matrix_document(matrix):
    return [
        [{"row": row, "value": _signed(*entry)} for row, entry in sorted(matrix.column(column).items())]
        for column in range(matrix.shape[1])
    ]


def resolution_document(w: Iterable[int]) -> dict:
    """Plain data describing the cellular resolution, ready for YAML export."""
    complex_ = cell_complex(w)
    phi1, phi2 = cellular_differentials(w)
    shift = complex_.shift
    ranks = complex_.face_counts
    return {
        "weights": list(complex_.source_weights),
        "canonical_weights": list(complex_.weights),
        "shift": shift,
        "modules": [
            {"homological_degree": i, "rank": ranks[i - 1], "twist": -(shift + i - 1)}
            for i in range(1, 4)
        ],
        "differentials": {
            "phi1": _matrix_document(phi1),
            "phi2": _matrix_document(phi2),
        },
        "bases": {
            "vertices": [{"cell": list(v), "label": str(complex_.label(v))} for v in complex_.vertices],
            "edges": [{"cell": [list(p) for p in e], "label": str(complex_.label(e))} for e in complex_.edges],
            "facets": [{"cell": [list(p) for p in f], "label": str(complex_.label(f))} for f in complex_.facets],
        },
    }
