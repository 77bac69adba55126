"""ACM, Buchsbaum, Hartshorne-Rao diameter and unobstructedness classification."""
from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Optional

from tetcurves.common.constants import DEFAULT_BETTI_GENERATOR_CAP
from tetcurves.common.exceptions import TetInputError
from tetcurves.curve.weights import WeightVector, is_s_minimal, orbit, reduce_to_minimal
from tetcurves.oracle.betti import graded_betti
from tetcurves.oracle.ideals import tetrahedral_ideal

LOG = logging.getLogger(__name__)

FAMILY_ACM = "ACM"
FAMILY_BUCHSBAUM = "(k,k-1,0,0,k-1,k)"
FAMILY_DIAMETER_TWO = "(k,k-1,0,0,k-1,k+1)"
FAMILY_DIAMETER_TWO_SHORT = "(k,k-2,0,0,k-1,k)"
FAMILY_SKEW_PAIR = "(a1,0,0,0,0,a6)"

LINEAR_YES = "yes"
LINEAR_UNKNOWN = "unknown"


class DiameterClass(enum.IntEnum):
    """Diameter of the Hartshorne-Rao module, with everything past two lumped together."""

    ACM = 0
    ONE = 1
    TWO = 2
    MORE_THAN_TWO = 3

    @property
    def label(self) -> str:
        return "more-than-two" if self is DiameterClass.MORE_THAN_TWO else str(int(self))


class Unobstructedness(NamedTuple):
    known: bool
    family: Optional[str]


def _buchsbaum_pattern(v):
    k = v[0]
    return k >= 1 and tuple(v) == (k, k - 1, 0, 0, k - 1, k)


def _diameter_two_pattern(v):
    k = v[0]
    return k >= 1 and tuple(v) == (k, k - 1, 0, 0, k - 1, k + 1)


def _diameter_two_short_pattern(v):
    k = v[0]
    return k >= 2 and tuple(v) == (k, k - 2, 0, 0, k - 1, k)


def _skew_pair_pattern(v):
    return v[0] > 0 and v[5] > 0 and not any(v[1:5])


def _unique_minimal_pattern(v):
    return v[0] >= 2 and v[5] >= 2 and not any(v[1:5])


def orbit_matches(w: Iterable[int], pattern: Callable) -> bool:
    return any(pattern(v) for v in orbit(w))


def _minimal(w):
    return reduce_to_minimal(w).result


def is_acm(w: Iterable[int]) -> bool:
    """True when the curve reduces to the trivial curve."""
    return _minimal(w).is_trivial


def _lines_meet(first, second):
    return first + second != 7


def schwartau_acm(a1: int, a3: int, a4: int, a6: int) -> bool:
    """ACM criterion for the curve (a1, 0, a3, a4, 0, a6).

    The four lines form a square: lines 1 and 6 are opposite sides, as are
    lines 3 and 4.
    """
    weights = {1: a1, 3: a3, 4: a4, 6: a6}
    if any(isinstance(value, bool) or not isinstance(value, int) or value < 0 for value in weights.values()):
        raise TetInputError(f"Weights must be non-negative integers, got: {[a1, a3, a4, a6]}")
    zeros = [line for line, value in weights.items() if value == 0]

    if not zeros:
        return abs(a1 + a6 - a3 - a4) <= 1
    if len(zeros) == 1:
        line = zeros[0]
        meeting = sum(value for other, value in weights.items() if other != line and _lines_meet(line, other))
        return weights[7 - line] + 1 >= meeting
    supported = [line for line, value in weights.items() if value]
    return len(supported) < 2 or _lines_meet(*supported)


def schwartau_acm_original(a1: int, a3: int, a4: int, a6: int) -> Optional[bool]:
    """Schwartau's statement in its original, non-symmetric case list.

    Returns None for tuples outside the listed cases.
    """
    if a1 > 0 and a3 > 0 and a4 > 0 and a6 > 0:
        return abs(a1 + a6 - a3 - a4) <= 1
    if a1 > 0 and a4 > 0 and a6 > 0 and a3 == 0:
        return a1 + a6 <= a4 + 1
    if a1 > 0 and a4 > 0 and a3 == 0 and a6 == 0:
        return True
    if a1 > 0 and a6 > 0 and a3 == 0 and a4 == 0:
        return False
    if a1 > 0 and a3 == 0 and a4 == 0 and a6 == 0:
        return True
    return None


def is_buchsbaum(w: Iterable[int]) -> bool:
    """ACM, or even linked to a curve (k, k-1, 0, 0, k-1, k) up to symmetry."""
    minimal = _minimal(w)
    return minimal.is_trivial or orbit_matches(minimal, _buchsbaum_pattern)


def hr_diameter_class(w: Iterable[int]) -> DiameterClass:
    return _diameter_of_minimal(_minimal(w))


def _diameter_of_minimal(minimal):
    if minimal.is_trivial:
        return DiameterClass.ACM
    if orbit_matches(minimal, _buchsbaum_pattern):
        return DiameterClass.ONE
    if orbit_matches(minimal, _diameter_two_pattern) or orbit_matches(minimal, _diameter_two_short_pattern):
        return DiameterClass.TWO
    return DiameterClass.MORE_THAN_TWO


_UNOBSTRUCTED_FAMILIES = (
    (FAMILY_BUCHSBAUM, _buchsbaum_pattern),
    (FAMILY_DIAMETER_TWO, _diameter_two_pattern),
    (FAMILY_DIAMETER_TWO_SHORT, _diameter_two_short_pattern),
    (FAMILY_SKEW_PAIR, _skew_pair_pattern),
)


def _family_of(v):
    for family, pattern in _UNOBSTRUCTED_FAMILIES:
        if orbit_matches(v, pattern):
            return family
    return None


def known_unobstructed(w: Iterable[int]) -> Unobstructedness:
    """Whether the even liaison class of w has a minimal curve in a family known to be unobstructed.

    A False answer means the curve is not covered, not that it is obstructed.
    """
    return _unobstructedness_of_minimal(_minimal(w))


def _unobstructedness_of_minimal(minimal):
    if minimal.is_trivial:
        return Unobstructedness(True, FAMILY_ACM)
    family = _family_of(minimal)
    return Unobstructedness(family is not None, family)


def unobstructed_family(w: Iterable[int]) -> Optional[str]:
    """Family of w itself (up to symmetry), ACM included; None when w is in no known family."""
    w = WeightVector(w)
    if is_acm(w):
        return FAMILY_ACM
    return _family_of(w)


def linear_resolution_known(w: Iterable[int]) -> str:
    w = WeightVector(w)
    if not w.is_trivial and is_s_minimal(w):
        return LINEAR_YES
    return LINEAR_UNKNOWN


def has_linear_resolution(w: Iterable[int], generator_cap: int = DEFAULT_BETTI_GENERATOR_CAP) -> Optional[bool]:
    """Settle linearity with the Betti oracle; None for the trivial curve."""
    w = WeightVector(w)
    if w.is_trivial:
        return None
    return graded_betti(tetrahedral_ideal(w), generator_cap).is_linear()


def unique_minimal_known(w: Iterable[int]) -> bool:
    """True when the minimal curve is (m,0,0,0,0,k) with m, k >= 2 up to symmetry."""
    return orbit_matches(_minimal(w), _unique_minimal_pattern)


@dataclass(frozen=True)
class CurveClassification:
    weights: WeightVector
    minimal_weights: WeightVector
    reduction_count: int
    trivial: bool
    s_minimal: bool
    acm: bool
    buchsbaum: bool
    hr_diameter: DiameterClass
    known_unobstructed: Unobstructedness
    linear_resolution: str
    unique_minimal: bool

    def as_dict(self):
        return {
            "weights": list(self.weights),
            "minimal_weights": list(self.minimal_weights),
            "reduction_count": self.reduction_count,
            "trivial": self.trivial,
            "s_minimal": self.s_minimal,
            "acm": self.acm,
            "buchsbaum": self.buchsbaum,
            "hr_diameter": self.hr_diameter.label,
            "known_unobstructed": self.known_unobstructed.known,
            "family": self.known_unobstructed.family,
            "linear_resolution": self.linear_resolution,
            "unique_minimal": self.unique_minimal,
        }


def classify(w: Iterable[int]) -> CurveClassification:
    w = WeightVector(w)
    trace = reduce_to_minimal(w)
    diameter = _diameter_of_minimal(trace.result)
    return CurveClassification(
        weights=w,
        minimal_weights=trace.result,
        reduction_count=trace.count,
        trivial=w.is_trivial,
        s_minimal=is_s_minimal(w),
        acm=diameter is DiameterClass.ACM,
        buchsbaum=diameter <= DiameterClass.ONE,
        hr_diameter=diameter,
        known_unobstructed=_unobstructedness_of_minimal(trace.result),
        linear_resolution=linear_resolution_known(w),
        unique_minimal=orbit_matches(trace.result, _unique_minimal_pattern),
    )
