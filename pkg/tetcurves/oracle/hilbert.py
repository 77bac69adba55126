"""Hilbert functions and polynomials of quotients by monomial ideals."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import count
from typing import Dict, List, Optional

from tetcurves.common.constants import CAP_HILBERT_DEGREE, DEFAULT_HILBERT_DEGREE_CAP, MIN_HILBERT_WINDOW
from tetcurves.common.exceptions import CapExceededError, TetInputError, UndefinedInvariantError
from tetcurves.oracle.monomials import Monomial, MonomialIdeal

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert function values and the linear polynomial they settle on."""

    values: Dict[int, int] = field(default_factory=dict)
    fitted_degree: int = 0
    fitted_genus: int = 0
    stabilization_degree: int = 0

    def polynomial(self, t: int) -> int:
        return self.fitted_degree * t + 1 - self.fitted_genus


def _monomials_of_degree(t):
    for ea in range(t + 1):
        for eb in range(t - ea + 1):
            for ec in range(t - ea - eb + 1):
                yield Monomial((ea, eb, ec, t - ea - eb - ec))


def _check_degree(t, degree_cap):
    if t < 0:
        raise TetInputError(f"Degree must be non-negative, got: {t}")
    if t > degree_cap:
        raise CapExceededError(CAP_HILBERT_DEGREE, degree_cap, t)


def hilbert_function(ideal: MonomialIdeal, t: int, degree_cap: int = DEFAULT_HILBERT_DEGREE_CAP) -> int:
    """Count the standard monomials of degree t.

    Args:
        ideal (MonomialIdeal): The ideal I
        t (int): Degree
        degree_cap (int): Largest degree that may be enumerated

    Returns:
        int: dim_k (R/I)_t
    """
    _check_degree(t, degree_cap)
    return sum(1 for monomial in _monomials_of_degree(t) if not ideal.contains(monomial))


class _Staircase:
    """Evaluates HF(t) column by column.

    For each (e_a, e_b, e_c) the standard monomials a^e_a b^e_b c^e_c d^k
    are those with k below the smallest d-exponent of a generator whose
    a, b, c part divides it, so HF(t) counts columns of total s <= t with
    t - s below that height.
    """

    def __init__(self, ideal):
        self.generators = [g.exponents for g in ideal.generators]
        self.columns = []
        self.top = -1

    def _height(self, ea, eb, ec):
        heights = [g[3] for g in self.generators if g[0] <= ea and g[1] <= eb and g[2] <= ec]
        return min(heights) if heights else None

    def _extend(self, t):
        while self.top < t:
            self.top += 1
            s = self.top
            for ea in range(s + 1):
                for eb in range(s - ea + 1):
                    self.columns.append((s, self._height(ea, eb, s - ea - eb)))

    def value(self, t):
        self._extend(t)
        return sum(1 for s, height in self.columns if s <= t and (height is None or t - s < height))


def hilbert_series_values(ideal: MonomialIdeal, top: int,
                          degree_cap: int = DEFAULT_HILBERT_DEGREE_CAP) -> List[int]:
    """Return [HF(0), ..., HF(top)] in a single staircase pass."""
    _check_degree(top, degree_cap)
    staircase = _Staircase(ideal)
    return [staircase.value(t) for t in range(top + 1)]


def hilbert_polynomial(ideal: MonomialIdeal, window: Optional[int] = None,
                       degree_cap: int = DEFAULT_HILBERT_DEGREE_CAP) -> HilbertData:
    """Fit the Hilbert polynomial deg * t + 1 - g of a curve's coordinate ring.

    Values are computed for increasing t until the first differences have
    been constant over `window` consecutive degrees.

    Args:
        ideal (MonomialIdeal): Ideal of a one-dimensional scheme
        window (int): Number of agreeing differences required; defaults to
            max(4, largest generator degree)
        degree_cap (int): Largest degree that may be evaluated

    Returns:
        HilbertData: Values up to the degree where stabilization was seen

    Raises:
        UndefinedInvariantError: For the unit ideal (empty scheme)
        CapExceededError: When the values have not stabilized by degree_cap
    """
    if ideal.is_unit:
        raise UndefinedInvariantError("The unit ideal defines the empty scheme: no Hilbert polynomial of a curve")
    if window is None:
        window = max(MIN_HILBERT_WINDOW, ideal.max_generator_degree)

    staircase = _Staircase(ideal)
    values = []
    for t in count():
        if t > degree_cap:
            raise CapExceededError(CAP_HILBERT_DEGREE, degree_cap, t)
        values.append(staircase.value(t))
        if t < window:
            continue
        differences = {values[t - k] - values[t - k - 1] for k in range(window)}
        if len(differences) != 1:
            continue

        degree = differences.pop()
        constant = values[t] - degree * t
        stabilization = t
        while stabilization > 0 and values[stabilization - 1] == degree * (stabilization - 1) + constant:
            stabilization -= 1
        LOG.debug("Hilbert function stabilized at degree %d (checked up to %d)", stabilization, t)
        return HilbertData(
            values=dict(enumerate(values)),
            fitted_degree=degree,
            fitted_genus=1 - constant,
            stabilization_degree=stabilization,
        )
