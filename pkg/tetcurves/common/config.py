"""Configuration management for the tet client."""
import os
from dataclasses import dataclass
from dotenv import load_dotenv
from tetcurves.common.constants import DEFAULT_BETTI_GENERATOR_CAP, DEFAULT_HILBERT_DEGREE_CAP
from tetcurves.common.exceptions import TetConfigError

# Load environment variables from .env file
load_dotenv()


@dataclass(frozen=True)
class OracleLimits:
    """Desk-scale caps handed to the oracle functions."""

    hilbert_degree_cap: int = DEFAULT_HILBERT_DEGREE_CAP
    betti_generator_cap: int = DEFAULT_BETTI_GENERATOR_CAP

    def as_dict(self):
        return {
            'hilbert_degree_cap': self.hilbert_degree_cap,
            'betti_generator_cap': self.betti_generator_cap,
        }


def _int_setting(value, default):
    """Convert a setting to int, falling back to the default."""
    if value is None or value == '':
        return default
    try:
        return int(value)
    except (TypeError, ValueError):
        return default


def _first_set(override, environment):
    # An explicit 0 on the command line must reach validate()
    return override if override is not None else environment


class TetConfig:
    """Configuration class for the tet client."""

    def __init__(self, config_overrides=None):
        """
        Initialize configuration.

        Args:
            config_overrides: Dict of configuration overrides from command-line arguments.
                             Keys can be 'hilbert_degree_cap', 'betti_generator_cap'.
        """
        overrides = config_overrides or {}

        # Apply overrides with precedence: command-line > environment variables > defaults
        self._hilbert_degree_cap = _first_set(overrides.get('hilbert_degree_cap'), os.getenv('TET_HILBERT_DEGREE_CAP'))
        self._betti_generator_cap = _first_set(
            overrides.get('betti_generator_cap'), os.getenv('TET_BETTI_GENERATOR_CAP')
        )

    def validate(self):
        """Validate configuration."""
        if self.hilbert_degree_cap <= 0:
            raise TetConfigError(
                f"TET_HILBERT_DEGREE_CAP/--cap must be positive, got: {self.hilbert_degree_cap}"
            )
        if self.betti_generator_cap <= 0:
            raise TetConfigError(
                f"TET_BETTI_GENERATOR_CAP/--generator-cap must be positive, got: {self.betti_generator_cap}"
            )

    @property
    def hilbert_degree_cap(self):
        """Get the largest degree the Hilbert enumeration may reach."""
        return _int_setting(self._hilbert_degree_cap, DEFAULT_HILBERT_DEGREE_CAP)

    @property
    def betti_generator_cap(self):
        """Get the largest generator count accepted by graded_betti."""
        return _int_setting(self._betti_generator_cap, DEFAULT_BETTI_GENERATOR_CAP)

    @property
    def limits(self):
        """Get the caps as an OracleLimits value."""
        return OracleLimits(
            hilbert_degree_cap=self.hilbert_degree_cap,
            betti_generator_cap=self.betti_generator_cap,
        )
