"""Constants for the tet client."""

# Default oracle limits
DEFAULT_HILBERT_DEGREE_CAP = 60
DEFAULT_BETTI_GENERATOR_CAP = 64
MIN_HILBERT_WINDOW = 4

# Cap names reported by CapExceededError
CAP_HILBERT_DEGREE = "hilbert-degree"
CAP_BETTI_GENERATORS = "betti-generators"

# Variables of the polynomial ring, in exponent-vector order
VARIABLES = ("a", "b", "c", "d")

# Line i (1-based) is the zero locus of the pair of variables LINE_PAIRS[i - 1]
LINE_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

# Facet tag -> (reduced lines, pivot variable index)
FACET_LINES = {
    "A": ((1, 2, 3), 0),
    "B": ((1, 4, 5), 1),
    "C": ((2, 4, 6), 2),
    "D": ((3, 5, 6), 3),
}
FACET_ORDER = ("A", "B", "C", "D")

# Process exit codes
EXIT_OK = 0
EXIT_VERIFICATION_MISMATCH = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3
