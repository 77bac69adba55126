"""Tests for configuration precedence and the command helpers."""
import pytest

from tetcurves.common.config import OracleLimits, TetConfig
from tetcurves.common.constants import DEFAULT_BETTI_GENERATOR_CAP, DEFAULT_HILBERT_DEGREE_CAP
from tetcurves.common.exceptions import TetConfigError, TetInputError
from tetcurves.common.functions import (
    format_bool,
    format_optional,
    format_weights,
    parse_max_weight,
    parse_weight_arguments,
)


@pytest.fixture
def clean_env(monkeypatch):
    monkeypatch.delenv('TET_HILBERT_DEGREE_CAP', raising=False)
    monkeypatch.delenv('TET_BETTI_GENERATOR_CAP', raising=False)
    return monkeypatch


class TestTetConfig:
    def test_defaults(self, clean_env):
        config = TetConfig()
        config.validate()
        assert config.limits == OracleLimits(DEFAULT_HILBERT_DEGREE_CAP, DEFAULT_BETTI_GENERATOR_CAP)

    def test_environment(self, clean_env):
        clean_env.setenv('TET_HILBERT_DEGREE_CAP', '20')
        clean_env.setenv('TET_BETTI_GENERATOR_CAP', '12')
        config = TetConfig()
        assert config.hilbert_degree_cap == 20
        assert config.betti_generator_cap == 12

    def test_override_beats_environment(self, clean_env):
        clean_env.setenv('TET_HILBERT_DEGREE_CAP', '20')
        config = TetConfig({'hilbert_degree_cap': 30})
        assert config.hilbert_degree_cap == 30

    def test_unparsable_environment_falls_back(self, clean_env):
        clean_env.setenv('TET_HILBERT_DEGREE_CAP', 'many')
        assert TetConfig().hilbert_degree_cap == DEFAULT_HILBERT_DEGREE_CAP

    @pytest.mark.parametrize('overrides', [{'hilbert_degree_cap': 0}, {'betti_generator_cap': -4}])
    def test_validate_rejects_non_positive_caps(self, clean_env, overrides):
        with pytest.raises(TetConfigError):
            TetConfig(overrides).validate()

    def test_limits_as_dict(self):
        assert OracleLimits(5, 6).as_dict() == {'hilbert_degree_cap': 5, 'betti_generator_cap': 6}


class TestFunctions:
    @pytest.mark.parametrize('values', [
        ['5,1,3,2,2,5'],
        ['5', '1', '3', '2', '2', '5'],
        ['[5,', '1,', '3,', '2,', '2,', '5]'],
    ])
    def test_parse_weight_arguments(self, values):
        assert parse_weight_arguments(values) == (5, 1, 3, 2, 2, 5)

    def test_parse_weight_arguments_rejects_short_vector(self):
        with pytest.raises(TetInputError):
            parse_weight_arguments(['1,2,3'])

    def test_parse_max_weight(self):
        assert parse_max_weight('4') == 4
        for bad in ('-1', 'x', '2.5', '', '²', '٥'):
            with pytest.raises(TetInputError):
                parse_max_weight(bad)

    def test_formatting(self):
        assert format_bool(True) == 'Yes'
        assert format_bool(False) == 'No'
        assert format_bool(None) == ''
        assert format_weights((1, 0, 0, 0, 0, 1)) == '[1, 0, 0, 0, 0, 1]'
        assert format_optional(None) == ''
        assert format_optional(8) == 8
