"""Tests for the formula-versus-oracle cross-checks."""
import pytest

from tetcurves.common.config import OracleLimits
from tetcurves.common.exceptions import CapExceededError, VerificationError
from tetcurves.verification import STATUS_FAIL, STATUS_PASS, STATUS_SKIPPED, CheckResult, require_passed, run_checks


def _statuses(results):
    return {result.name: result.status for result in results}


def test_minimal_curve_passes_every_check():
    statuses = _statuses(run_checks((3, 1, 1, 1, 1, 4)))
    assert statuses['basic-double-links'] == STATUS_SKIPPED
    for name in ('hilbert-degree', 'hilbert-genus', 'hilbert-function', 'generators', 'graded-betti',
                 'multigraded-betti', 'chain-complex', 'euler'):
        assert statuses[name] == STATUS_PASS, name


def test_non_minimal_curve_skips_closed_forms():
    results = run_checks((4, 2, 2, 1, 1, 4))
    assert not any(result.failed for result in results)
    statuses = _statuses(results)
    assert statuses['basic-double-links'] == STATUS_PASS
    assert statuses['hilbert-degree'] == STATUS_PASS
    for name in ('hilbert-genus', 'generators', 'graded-betti', 'chain-complex'):
        assert statuses[name] == STATUS_SKIPPED
    genus = next(result for result in results if result.name == 'hilbert-genus')
    assert genus.detail.startswith('oracle genus 77')


def test_trivial_curve():
    statuses = _statuses(run_checks((0, 0, 0, 0, 0, 0)))
    assert statuses == {'basic-double-links': STATUS_SKIPPED, 'trivial-ideal': STATUS_PASS}


def test_acm_curve():
    results = run_checks((1, 0, 1, 1, 0, 1))
    assert not any(result.failed for result in results)


def test_caps_propagate():
    with pytest.raises(CapExceededError):
        run_checks((1, 0, 0, 0, 0, 1), OracleLimits(hilbert_degree_cap=3))
    with pytest.raises(CapExceededError):
        run_checks((1, 0, 0, 0, 0, 1), OracleLimits(betti_generator_cap=3))


def test_check_result():
    result = CheckResult('euler', STATUS_FAIL, '4 - 4 + 0')
    assert result.failed
    assert result.as_dict() == {'check': 'euler', 'status': STATUS_FAIL, 'detail': '4 - 4 + 0'}


def test_require_passed():
    results = run_checks((2, 1, 0, 0, 1, 2))
    assert require_passed(results) == results
    with pytest.raises(VerificationError) as excinfo:
        require_passed(results + [CheckResult('euler', STATUS_FAIL, '4 - 4 + 0')])
    assert excinfo.value.check == 'euler'
    assert excinfo.value.exit_code == 1
