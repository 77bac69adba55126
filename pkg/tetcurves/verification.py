"""Cross-checks of the closed formulas against the monomial ideal oracle."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

from tetcurves.common.config import OracleLimits
from tetcurves.common.constants import MIN_HILBERT_WINDOW
from tetcurves.common.exceptions import VerificationError
from tetcurves.curve.cells import (
    betti_numbers,
    cellular_betti,
    cellular_differentials,
    hilbert_function_from_resolution,
    is_chain_complex,
    minimal_generators,
)
from tetcurves.curve.invariants import degree, genus_minimal
from tetcurves.curve.weights import WeightVector, apply_reduction, applicable_reductions, is_s_minimal, reduce_to_minimal
from tetcurves.oracle.betti import BettiTable, multigraded_betti
from tetcurves.oracle.hilbert import hilbert_polynomial
from tetcurves.oracle.ideals import bdl_check, tetrahedral_ideal

LOG = logging.getLogger(__name__)

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == STATUS_FAIL

    def as_dict(self):
        return {"check": self.name, "status": self.status, "detail": self.detail}


def _result(name, passed, detail):
    status = STATUS_PASS if passed else STATUS_FAIL
    if not passed:
        LOG.warning("check %s failed: %s", name, detail)
    return CheckResult(name, status, detail)


def check_basic_double_links(w: WeightVector) -> CheckResult:
    """The link identity for every applicable facet of w and along the reduction trace."""
    steps = list(reduce_to_minimal(w).steps)
    if not w.is_trivial:
        steps.extend(apply_reduction(w, tag) for tag in applicable_reductions(w))
    if not steps:
        return CheckResult("basic-double-links", STATUS_SKIPPED, "no reduction applies")
    failures = [f"{step.facet.tag} on {list(step.before)}" for step in steps if not bdl_check(step)]
    return _result("basic-double-links", not failures,
                   f"{len(steps)} step(s) checked" if not failures else "fails for " + ", ".join(failures))


def check_generators(w: WeightVector) -> CheckResult:
    corner_cut = minimal_generators(w)
    oracle = tetrahedral_ideal(w)
    return _result("generators", corner_cut == oracle,
                   f"{len(corner_cut)} corner-cut vs {len(oracle)} oracle generators")


def check_hilbert(w: WeightVector, limits: OracleLimits, minimal: bool) -> List[CheckResult]:
    data = hilbert_polynomial(tetrahedral_ideal(w), window=max(MIN_HILBERT_WINDOW, sum(w)),
                              degree_cap=limits.hilbert_degree_cap)
    expected_degree = degree(w)
    results = [_result("hilbert-degree", data.fitted_degree == expected_degree,
                       f"oracle {data.fitted_degree}, formula {expected_degree}")]
    if not minimal:
        results.append(CheckResult("hilbert-genus", STATUS_SKIPPED,
                                   f"oracle genus {data.fitted_genus}; no closed form off S-minimal curves"))
        return results

    expected_genus = genus_minimal(w)
    results.append(_result("hilbert-genus", data.fitted_genus == expected_genus,
                           f"oracle {data.fitted_genus}, formula {expected_genus}"))
    mismatches = [t for t, value in data.values.items() if value != hilbert_function_from_resolution(w, t)]
    results.append(_result("hilbert-function", not mismatches,
                           f"degrees 0..{max(data.values)} agree" if not mismatches
                           else f"differs in degrees {mismatches}"))
    return results


def check_betti(w: WeightVector, limits: OracleLimits) -> List[CheckResult]:
    multigraded = multigraded_betti(tetrahedral_ideal(w), limits.betti_generator_cap)
    oracle = BettiTable.from_multigraded(multigraded)
    formula = betti_numbers(w)
    return [
        _result("graded-betti", oracle == formula, f"oracle {oracle.rows()}, formula {formula.rows()}"),
        _result("multigraded-betti", multigraded == cellular_betti(w),
                "face labels match oracle multidegrees"),
    ]


def check_chain_complex(w: WeightVector) -> List[CheckResult]:
    phi1, phi2 = cellular_differentials(w)
    beta1, beta2, beta3 = betti_numbers(w).ranks_up_to(3)
    return [
        _result("chain-complex", is_chain_complex(phi1, phi2), f"phi1 {phi1.shape}, phi2 {phi2.shape}"),
        _result("euler", beta1 - beta2 + beta3 == 1, f"{beta1} - {beta2} + {beta3}"),
    ]


def run_checks(w: Iterable[int], limits: Optional[OracleLimits] = None) -> List[CheckResult]:
    """Run every applicable check for w.

    Cap violations propagate as CapExceededError.
    """
    w = WeightVector(w)
    limits = limits or OracleLimits()
    minimal = not w.is_trivial and is_s_minimal(w)

    results = [check_basic_double_links(w)]
    if w.is_trivial:
        results.append(_result("trivial-ideal", tetrahedral_ideal(w).is_unit, "unit ideal"))
        return results
    results.extend(check_hilbert(w, limits, minimal))
    if minimal:
        results.append(check_generators(w))
        results.extend(check_betti(w, limits))
        results.extend(check_chain_complex(w))
    else:
        reason = "not S-minimal; no closed form"
        results.extend(CheckResult(name, STATUS_SKIPPED, reason)
                       for name in ("generators", "graded-betti", "chain-complex"))
    return results


def require_passed(results: Iterable[CheckResult]) -> List[CheckResult]:
    """Return the results unchanged, raising VerificationError for the first failed check."""
    results = list(results)
    for result in results:
        if result.failed:
            raise VerificationError(result.name, result.detail)
    return results
