"""Multigraded Betti numbers of monomial ideals via upper Koszul complexes."""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Mapping, Tuple

import sympy

from tetcurves.common.constants import CAP_BETTI_GENERATORS, DEFAULT_BETTI_GENERATOR_CAP, VARIABLES
from tetcurves.common.exceptions import CapExceededError
from tetcurves.oracle.monomials import Monomial, MonomialIdeal

LOG = logging.getLogger(__name__)

_ALL_VARIABLES = tuple(range(len(VARIABLES)))


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j}, i = 1 for the generators."""

    entries: Mapping[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", {key: value for key, value in sorted(self.entries.items()) if value})

    @classmethod
    def from_multigraded(cls, multigraded: Mapping[Tuple[int, Monomial], int]) -> BettiTable:
        entries = Counter()
        for (i, multidegree), rank in multigraded.items():
            entries[(i, multidegree.degree)] += rank
        return cls(dict(entries))

    def rank(self, i: int) -> int:
        return sum(value for (k, _), value in self.entries.items() if k == i)

    @property
    def ranks(self) -> Tuple[int, ...]:
        """Total ranks (beta_1, beta_2, ...) up to the last nonzero one."""
        top = max((i for i, _ in self.entries), default=0)
        return self.ranks_up_to(top)

    def ranks_up_to(self, top: int) -> Tuple[int, ...]:
        return tuple(self.rank(i) for i in range(1, top + 1))

    def degrees(self, i: int) -> List[int]:
        return [j for (k, j) in self.entries if k == i]

    def rows(self) -> List[Tuple[int, int, int]]:
        return [(i, j, value) for (i, j), value in self.entries.items()]

    def is_linear(self) -> bool:
        """True when every beta_{i,j} sits at j = s + i - 1 for one s."""
        shifts = {j - i + 1 for (i, j) in self.entries}
        return len(shifts) <= 1

    def euler_characteristic(self) -> int:
        return sum((-1) ** (i + 1) * value for (i, _), value in self.entries.items())


def lcm_lattice(ideal: MonomialIdeal) -> FrozenSet[Monomial]:
    """Return the lcms of all non-empty subsets of the generators."""
    generators = ideal.generators
    elements = set(generators)
    frontier = set(generators)
    while frontier:
        frontier = {element.lcm(g) for element in frontier for g in generators} - elements
        elements |= frontier
    return frozenset(elements)


def _upper_koszul_faces(ideal, multidegree):
    exponents = multidegree.exponents
    support = [k for k in _ALL_VARIABLES if exponents[k] > 0]
    faces = []
    for size in range(len(support) + 1):
        for face in combinations(support, size):
            shifted = list(exponents)
            for k in face:
                shifted[k] -= 1
            if ideal.contains(Monomial(tuple(shifted))):
                faces.append(face)
    return faces


def _is_cone(faces):
    face_set = set(faces)
    vertices = {k for face in faces for k in face}
    for apex in vertices:
        if all(tuple(sorted(set(face) | {apex})) in face_set for face in faces):
            return True
    return False


def _boundary_rank(faces_by_dim, dim):
    """Rank of the boundary map from dim-faces to (dim - 1)-faces."""
    sources = faces_by_dim.get(dim, [])
    targets = faces_by_dim.get(dim - 1, [])
    if not sources or not targets:
        return 0
    index = {face: row for row, face in enumerate(targets)}
    matrix = sympy.zeros(len(targets), len(sources))
    for column, face in enumerate(sources):
        for position in range(len(face)):
            matrix[index[face[:position] + face[position + 1:]], column] = (-1) ** position
    return matrix.rank()


def reduced_homology(faces) -> Dict[int, int]:
    """Reduced homology dimensions over the rationals, keyed by dimension.

    The empty face, when present, sits in dimension -1.
    """
    faces_by_dim = {}
    for face in faces:
        faces_by_dim.setdefault(len(face) - 1, []).append(face)
    if not faces_by_dim or _is_cone(faces):
        return {}
    homology = {}
    for dim, chains in faces_by_dim.items():
        rank = len(chains) - _boundary_rank(faces_by_dim, dim) - _boundary_rank(faces_by_dim, dim + 1)
        if rank:
            homology[dim] = rank
    return homology


def multigraded_betti(ideal: MonomialIdeal,
                      generator_cap: int = DEFAULT_BETTI_GENERATOR_CAP) -> Dict[Tuple[int, Monomial], int]:
    """Return beta_{i,b} = dim H~_{i-2}(K^b) for b in the lcm lattice.

    Args:
        ideal (MonomialIdeal): The ideal I
        generator_cap (int): Largest accepted number of minimal generators

    Returns:
        dict: (homological degree, multidegree) -> rank, zero ranks omitted
    """
    if len(ideal) > generator_cap:
        raise CapExceededError(CAP_BETTI_GENERATORS, generator_cap, len(ideal))
    lattice = lcm_lattice(ideal)
    LOG.debug("lcm lattice of %d generators has %d elements", len(ideal), len(lattice))
    betti = {}
    for multidegree in sorted(lattice):
        for dim, rank in reduced_homology(_upper_koszul_faces(ideal, multidegree)).items():
            betti[(dim + 2, multidegree)] = rank
    return betti


def graded_betti(ideal: MonomialIdeal, generator_cap: int = DEFAULT_BETTI_GENERATOR_CAP) -> BettiTable:
    """Graded Betti numbers of I, with beta_1 counting the minimal generators."""
    return BettiTable.from_multigraded(multigraded_betti(ideal, generator_cap))
