"""Tetrahedral ideals built as intersections of powers of line ideals."""
from __future__ import annotations

import logging
from functools import lru_cache, reduce
from typing import Sequence, Tuple

from tetcurves.common.constants import LINE_PAIRS
from tetcurves.common.exceptions import TetInputError
from tetcurves.oracle.monomials import Monomial, MonomialIdeal

LOG = logging.getLogger(__name__)


def power_ideal(pair: Tuple[int, int], n: int) -> MonomialIdeal:
    """Return (x, y)^n for the variable indices in pair.

    Args:
        pair (tuple): Two distinct variable indices
        n (int): Non-negative exponent

    Returns:
        MonomialIdeal: Generated by x^p y^(n-p), 0 <= p <= n
    """
    x, y = pair
    if x == y:
        raise TetInputError(f"A line ideal needs two distinct variables, got: {pair}")
    if n < 0:
        raise TetInputError(f"Power must be non-negative, got: {n}")
    generators = []
    for p in range(n + 1):
        exponents = [0, 0, 0, 0]
        exponents[x] = p
        exponents[y] = n - p
        generators.append(Monomial(tuple(exponents)))
    return MonomialIdeal(tuple(generators))


def intersect(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    """Intersect two monomial ideals through the pairwise lcms of their generators."""
    return MonomialIdeal(tuple(f.lcm(g) for f in first.generators for g in second.generators))


def tetrahedral_ideal(weights: Sequence[int]) -> MonomialIdeal:
    """Return the ideal of the curve with the given six line weights."""
    return _tetrahedral_ideal(tuple(weights))


@lru_cache(maxsize=8192)
def _tetrahedral_ideal(weights):
    if len(weights) != len(LINE_PAIRS):
        raise TetInputError(f"A tetrahedral curve needs {len(LINE_PAIRS)} weights, got: {list(weights)}")
    ideals = [power_ideal(pair, weight) for pair, weight in zip(LINE_PAIRS, weights)]
    ideal = reduce(intersect, ideals, MonomialIdeal.unit())
    LOG.debug("tetrahedral ideal of %s has %d generators", list(weights), len(ideal))
    return ideal


def contains(ideal: MonomialIdeal, monomial: Monomial) -> bool:
    """Return True when some generator of the ideal divides the monomial."""
    return ideal.contains(monomial)


def satisfies_line_conditions(weights: Sequence[int], monomial: Monomial) -> bool:
    """Membership in the tetrahedral ideal, tested line by line.

    A monomial lies in (x, y)^n exactly when its x and y exponents add up
    to at least n.
    """
    exponents = monomial.exponents
    return all(exponents[x] + exponents[y] >= weight for (x, y), weight in zip(LINE_PAIRS, weights))


def bdl_check(step) -> bool:
    """Check the basic double link identity G * I(after) + (F) = I(before).

    Args:
        step: A reduction step with `before`, `after`, `F` and `G` attributes

    Returns:
        bool: True when the two minimal generating sets coincide
    """
    linked = tetrahedral_ideal(step.after).times(Monomial.variable(step.G)) + MonomialIdeal((step.F,))
    expected = tetrahedral_ideal(step.before)
    if linked != expected:
        LOG.debug("basic double link identity fails for %s via %s", list(step.before), step.facet)
        return False
    return True
