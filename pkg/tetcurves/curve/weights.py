"""Weight vectors, tetrahedron symmetries and the four facet reductions."""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import FrozenSet, Iterable, Tuple, Union

from tetcurves.common.constants import FACET_LINES, FACET_ORDER, LINE_PAIRS, VARIABLES
from tetcurves.common.exceptions import InvalidReductionError, TetInputError
from tetcurves.oracle.monomials import Monomial

LOG = logging.getLogger(__name__)

_SEPARATOR = re.compile(r"\s*,\s*|\s+")
_BRACKETS = {"[": "]", "(": ")"}
_DECIMAL = re.compile(r"[0-9]+")


class WeightVector(tuple):
    """The weights (a1, ..., a6) of the six coordinate lines.

    Line i is the zero locus of the variable pair LINE_PAIRS[i - 1];
    lines i and 7 - i are skew.
    """

    __slots__ = ()

    def __new__(cls, weights: Iterable[int]):
        values = tuple(weights)
        if len(values) != len(LINE_PAIRS):
            raise TetInputError(f"A weight vector needs {len(LINE_PAIRS)} entries, got {len(values)}: {list(values)}")
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TetInputError(f"Weights must be integers, got: {value!r}")
            if value < 0:
                raise TetInputError(f"Weights must be non-negative, got: {list(values)}")
        return super().__new__(cls, values)

    def weight(self, line: int) -> int:
        """Weight of line 1..6."""
        return self[line - 1]

    @property
    def is_trivial(self) -> bool:
        return not any(self)

    def __repr__(self):
        return f"WeightVector({list(self)})"

    def __str__(self):
        return str(list(self))


def parse_weight_vector(text: str) -> WeightVector:
    """Parse "a1,a2,a3,a4,a5,a6", optionally wrapped in brackets or parentheses."""
    stripped = text.strip()
    if stripped and stripped[0] in _BRACKETS:
        if not stripped.endswith(_BRACKETS[stripped[0]]):
            raise TetInputError(f"Unbalanced brackets in weight vector: {text!r}")
        stripped = stripped[1:-1].strip()
    parts = _SEPARATOR.split(stripped) if stripped else []
    if any(not _DECIMAL.fullmatch(part) for part in parts):
        raise TetInputError(f"Weights must be non-negative decimal integers: {text!r}")
    return WeightVector(int(part) for part in parts)


@dataclass(frozen=True)
class Facet:
    """A face of the coordinate tetrahedron, named after the variable not on it."""

    tag: str
    reduced_lines: Tuple[int, int, int]
    pivot: int

    @property
    def pivot_name(self) -> str:
        return VARIABLES[self.pivot]

    def complement_lines(self) -> Tuple[int, int, int]:
        return tuple(line for line in range(1, 7) if line not in self.reduced_lines)


FACETS = {tag: Facet(tag, lines, pivot) for tag, (lines, pivot) in FACET_LINES.items()}


def get_facet(facet: Union[str, Facet]) -> Facet:
    if isinstance(facet, Facet):
        return facet
    try:
        return FACETS[str(facet).upper()]
    except KeyError:
        raise TetInputError(f"Unknown facet {facet!r}; expected one of {', '.join(FACET_ORDER)}") from None


@dataclass(frozen=True)
class ReductionStep:
    """One basic double link: I(before) = G * I(after) + (F)."""

    facet: Facet
    F: Monomial
    G: int
    before: WeightVector
    after: WeightVector

    def as_dict(self):
        return {
            "facet": self.facet.tag,
            "F": list(self.F.exponents),
            "G": VARIABLES[self.G],
            "after": list(self.after),
        }


@dataclass(frozen=True)
class ReductionTrace:
    start: WeightVector
    steps: Tuple[ReductionStep, ...]
    result: WeightVector

    @property
    def count(self) -> int:
        return len(self.steps)


def facet_weights(w: Iterable[int]) -> Tuple[int, int, int, int]:
    """Weights of the facets A, B, C, D: the sums over their three lines."""
    w = WeightVector(w)
    return tuple(sum(w.weight(line) for line in FACETS[tag].reduced_lines) for tag in FACET_ORDER)


def facet_monomial(w: WeightVector, facet: Facet) -> Monomial:
    """F for the facet: each reduced line contributes its non-pivot variable to its weight."""
    exponents = [0, 0, 0, 0]
    for line in facet.reduced_lines:
        x, y = LINE_PAIRS[line - 1]
        exponents[y if x == facet.pivot else x] += w.weight(line)
    return Monomial(tuple(exponents))


def _system_holds(w, facet):
    # F must lie in each of the three remaining line ideals
    exponents = facet_monomial(w, facet).exponents
    for line in facet.complement_lines():
        x, y = LINE_PAIRS[line - 1]
        if exponents[x] + exponents[y] < w.weight(line):
            return False
    return True


def _require_nontrivial(w, operation):
    if w.is_trivial:
        raise TetInputError(f"{operation} is undefined for the trivial curve {list(w)}")


def applicable_reductions(w: Iterable[int]) -> Tuple[str, ...]:
    """Tags of the facets whose inequality system holds, in facet order."""
    w = WeightVector(w)
    _require_nontrivial(w, "applicable_reductions")
    return tuple(tag for tag in FACET_ORDER if _system_holds(w, FACETS[tag]))


def apply_reduction(w: Iterable[int], facet: Union[str, Facet]) -> ReductionStep:
    """Reduce the facet's three weights by one (never below zero).

    Raises:
        InvalidReductionError: When the facet's inequality system fails
    """
    w = WeightVector(w)
    facet = get_facet(facet)
    _require_nontrivial(w, "apply_reduction")
    if not _system_holds(w, facet):
        raise InvalidReductionError(facet.tag, w)
    after = WeightVector(
        max(0, value - 1) if line in facet.reduced_lines else value
        for line, value in enumerate(w, start=1)
    )
    return ReductionStep(facet=facet, F=facet_monomial(w, facet), G=facet.pivot, before=w, after=after)


def max_line(w: Iterable[int]) -> int:
    """Smallest line index carrying the largest weight."""
    w = WeightVector(w)
    best = 1
    for line in range(2, 7):
        if w.weight(line) > w.weight(best):
            best = line
    return best


def is_s_minimal(w: Iterable[int]) -> bool:
    """True when no facet reduction applies (the trivial curve included)."""
    w = WeightVector(w)
    if w.is_trivial:
        return True
    line = max_line(w)
    return w.weight(line) + w.weight(7 - line) > max(facet_weights(w))


def _maximal_facets(w):
    weights = facet_weights(w)
    top = max(weights)
    return [tag for tag, weight in zip(FACET_ORDER, weights) if weight == top]


def reduce_to_minimal(w: Iterable[int]) -> ReductionTrace:
    """Reduce a facet of maximal weight until the curve is S-minimal.

    Among several maximal facets the first one in order A, B, C, D is used.
    """
    start = WeightVector(w)
    current = start
    steps = []
    while not is_s_minimal(current):
        step = apply_reduction(current, _maximal_facets(current)[0])
        LOG.debug("reduced facet %s of %s to %s", step.facet.tag, list(current), list(step.after))
        steps.append(step)
        current = step.after
    return ReductionTrace(start=start, steps=tuple(steps), result=current)


@lru_cache(maxsize=None)
def vertex_permutations() -> Tuple[Tuple[int, ...], ...]:
    return tuple(permutations(range(len(VARIABLES))))


def line_permutation(vertex_permutation) -> Tuple[int, ...]:
    """Return the 0-based line index each line is sent to by the vertex permutation."""
    targets = []
    for x, y in LINE_PAIRS:
        image = tuple(sorted((vertex_permutation[x], vertex_permutation[y])))
        targets.append(LINE_PAIRS.index(image))
    return tuple(targets)


@lru_cache(maxsize=None)
def symmetries() -> Tuple[Tuple[int, ...], ...]:
    """The 24 permutations of line positions induced by relabelling the vertices."""
    return tuple(line_permutation(p) for p in vertex_permutations())


def act(symmetry, w: Iterable[int]) -> WeightVector:
    """Move weight k to position symmetry[k]."""
    w = WeightVector(w)
    image = [0] * len(w)
    for k, value in enumerate(w):
        image[symmetry[k]] = value
    return WeightVector(image)


def orbit(w: Iterable[int]) -> FrozenSet[WeightVector]:
    w = WeightVector(w)
    return frozenset(act(symmetry, w) for symmetry in symmetries())


def canonical_form(w: Iterable[int]) -> Tuple[WeightVector, Tuple[int, ...]]:
    """Return the canonical orbit member and a vertex permutation producing it.

    The canonical member is the one whose reversed tuple is largest, so it
    carries a maximal weight on line 6.  Among the permutations reaching it
    the first in itertools order is returned; the identity wins when w is
    already canonical.
    """
    w = WeightVector(w)
    best, best_permutation = None, None
    for permutation in vertex_permutations():
        image = act(line_permutation(permutation), w)
        if best is None or image[::-1] > best[::-1]:
            best, best_permutation = image, permutation
    return best, best_permutation


def canonicalize(w: Iterable[int]) -> WeightVector:
    return canonical_form(w)[0]


def minimal_results_all_choices(w: Iterable[int]) -> FrozenSet[WeightVector]:
    """S-minimal results over every choice of maximal facet at every step."""
    return _all_choices(WeightVector(w))


@lru_cache(maxsize=65536)
def _all_choices(w):
    if is_s_minimal(w):
        return frozenset((w,))
    results = set()
    for tag in _maximal_facets(w):
        results |= _all_choices(apply_reduction(w, tag).after)
    return frozenset(results)


def tie_break_invariant(w: Iterable[int]) -> bool:
    """Check that all maximal-facet choices agree up to symmetry; log when they do not."""
    w = WeightVector(w)
    classes = {canonicalize(result) for result in minimal_results_all_choices(w)}
    if len(classes) > 1:
        LOG.warning("tie-break choices for %s reach inequivalent S-minimal curves: %s",
                    list(w), sorted(list(c) for c in classes))
        return False
    return True
