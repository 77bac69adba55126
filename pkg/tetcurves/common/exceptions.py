"""Custom exceptions for the tet client."""
from tetcurves.common.constants import (
    EXIT_CAP_EXCEEDED,
    EXIT_INPUT_ERROR,
    EXIT_VERIFICATION_MISMATCH,
)


class TetError(Exception):
    """Base exception for tet errors."""

    exit_code = 1


class TetConfigError(TetError):
    """Exception raised when the configuration is invalid."""

    exit_code = EXIT_INPUT_ERROR


class TetInputError(TetError):
    """Exception raised for malformed weight vectors or arguments."""

    exit_code = EXIT_INPUT_ERROR


class InvalidReductionError(TetInputError):
    """Exception raised when a facet's inequality system fails."""

    def __init__(self, facet, weights):
        """Initialize with the rejected facet and weight vector.

        Args:
            facet (str): Facet tag (A, B, C or D)
            weights (tuple): The weight vector the reduction was applied to
        """
        self.facet = facet
        self.weights = tuple(weights)
        super().__init__(
            f"Facet {facet} cannot be reduced for {list(self.weights)}: "
            "its inequality system does not hold"
        )


class NotSMinimalError(TetInputError):
    """Exception raised when an S-minimal, non-trivial curve is required."""

    def __init__(self, weights, operation):
        self.weights = tuple(weights)
        self.operation = operation
        if not any(self.weights):
            reason = "the trivial curve has the unit ideal"
        else:
            reason = "the curve is not S-minimal"
        super().__init__(
            f"{operation} needs a non-trivial S-minimal curve, but {reason}: "
            f"{list(self.weights)} (use --oracle to compute it from the ideal)"
        )


class UndefinedInvariantError(TetInputError):
    """Exception raised when an invariant is undefined for the given curve."""
    pass


class CapExceededError(TetError):
    """Exception raised when an oracle computation would exceed a cap."""

    exit_code = EXIT_CAP_EXCEEDED

    def __init__(self, cap_name, limit, requested=None):
        """Initialize with cap details.

        Args:
            cap_name (str): Name of the cap (e.g., 'hilbert-degree')
            limit (int): Configured limit
            requested (int): Value that would have been needed, when known
        """
        self.cap_name = cap_name
        self.limit = limit
        self.requested = requested

        if requested is None:
            message = f"{cap_name} cap of {limit} exceeded"
        else:
            message = f"{cap_name} cap of {limit} exceeded (needed {requested})"

        super().__init__(message)


class VerificationError(TetError):
    """Exception raised when a cross-check between two computations fails."""

    exit_code = EXIT_VERIFICATION_MISMATCH

    def __init__(self, check, detail):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}")
