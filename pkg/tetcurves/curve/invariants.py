"""Degree, genus and counts of S-minimal tetrahedral curves."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable, List, Optional

from tetcurves.common.config import OracleLimits
from tetcurves.common.constants import MIN_HILBERT_WINDOW
from tetcurves.common.exceptions import TetInputError, UndefinedInvariantError
from tetcurves.curve.cells import require_s_minimal
from tetcurves.curve.classify import unobstructed_family
from tetcurves.curve.weights import WeightVector, canonicalize, is_s_minimal
from tetcurves.oracle.hilbert import hilbert_polynomial
from tetcurves.oracle.ideals import tetrahedral_ideal

LOG = logging.getLogger(__name__)

GENUS_CLOSED_FORM = "closed form"
GENUS_ORACLE = "oracle"


def degree(w: Iterable[int]) -> int:
    return sum(comb(a + 1, 2) for a in WeightVector(w))


def initial_degree(w: Iterable[int]) -> int:
    """Smallest degree of a generator of an S-minimal curve's ideal."""
    canonical = canonicalize(require_s_minimal(w, "initial_degree"))
    return canonical[0] + canonical[5]


def genus_minimal(w: Iterable[int]) -> int:
    w = require_s_minimal(w, "genus_minimal")
    s = initial_degree(w)
    return degree(w) * (s - 1) + 1 - comb(s + 2, 3)


def genus_from_oracle(w: Iterable[int], limits: Optional[OracleLimits] = None) -> int:
    """Arithmetic genus read off the Hilbert polynomial of the curve's ideal."""
    w = WeightVector(w)
    if w.is_trivial:
        raise UndefinedInvariantError("The trivial curve is empty: its genus is undefined")
    limits = limits or OracleLimits()
    data = hilbert_polynomial(
        tetrahedral_ideal(w),
        window=max(MIN_HILBERT_WINDOW, sum(w)),
        degree_cap=limits.hilbert_degree_cap,
    )
    return data.fitted_genus


def genus(w: Iterable[int], limits: Optional[OracleLimits] = None) -> int:
    """Closed form for S-minimal curves, Hilbert polynomial otherwise.

    Raises:
        UndefinedInvariantError: For the trivial curve
        CapExceededError: When the oracle needs degrees past the Hilbert cap
    """
    w = WeightVector(w)
    if w.is_trivial:
        raise UndefinedInvariantError("The trivial curve is empty: its genus is undefined")
    if is_s_minimal(w):
        return genus_minimal(w)
    return genus_from_oracle(w, limits)


def hilbert_scheme_dimension(w: Iterable[int]) -> Optional[int]:
    """4 * deg for curves in a family known to be unobstructed, otherwise None."""
    w = WeightVector(w)
    if w.is_trivial or unobstructed_family(w) is None:
        return None
    return 4 * degree(w)


@dataclass(frozen=True)
class CurveInvariants:
    weights: WeightVector
    degree: int
    genus: int
    genus_source: str
    initial_degree: Optional[int]
    hilbert_scheme_dimension: Optional[int]

    def as_dict(self):
        return {
            "weights": list(self.weights),
            "degree": self.degree,
            "genus": self.genus,
            "genus_source": self.genus_source,
            "initial_degree": self.initial_degree,
            "hilbert_scheme_dimension": self.hilbert_scheme_dimension,
        }


def curve_invariants(w: Iterable[int], limits: Optional[OracleLimits] = None) -> CurveInvariants:
    w = WeightVector(w)
    minimal = not w.is_trivial and is_s_minimal(w)
    return CurveInvariants(
        weights=w,
        degree=degree(w),
        genus=genus(w, limits),
        genus_source=GENUS_CLOSED_FORM if minimal else GENUS_ORACLE,
        initial_degree=initial_degree(w) if minimal else None,
        hilbert_scheme_dimension=hilbert_scheme_dimension(w),
    )


def _check_max_weight(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise TetInputError(f"The maximal weight must be a non-negative integer, got: {m!r}")


def count_minimal(m: int) -> int:
    """Number of S-minimal weight vectors with a6 = m = max."""
    _check_max_weight(m)
    return sum(
        min(a1 - a5, m - a2) * min(a1 - a2, m - a5)
        for a1 in range(m + 1)
        for a2 in range(a1)
        for a5 in range(a1)
    )


def count_minimal_lower_bound(m: int) -> int:
    """Fifth-order lower estimate of count_minimal(m).

    Both factors of each summand are at least a1 - max(a2, a5), because
    m >= a1.
    """
    _check_max_weight(m)
    total = 0
    for a1 in range(m + 1):
        for a2 in range(a1):
            gap = a1 - a2
            total += (a2 + 1) * gap ** 2 + sum(k * k for k in range(1, gap))
    return total


def enumerate_minimal(m: int) -> List[WeightVector]:
    """All S-minimal vectors with a6 = m = max, in lexicographic order."""
    _check_max_weight(m)
    vectors = [
        WeightVector((a1, a2, a3, a4, a5, m))
        for a1 in range(m + 1)
        for a2 in range(a1)
        for a5 in range(a1)
        for a3 in range(min(a1 - a5, m - a2))
        for a4 in range(min(a1 - a2, m - a5))
    ]
    return sorted(vectors)


def count_minimal_brute_force(m: int) -> int:
    """Count by testing every vector with entries <= m and a6 = m."""
    _check_max_weight(m)
    total = 0
    for head in product(range(m + 1), repeat=5):
        w = WeightVector(head + (m,))
        if not w.is_trivial and is_s_minimal(w):
            total += 1
    return total
