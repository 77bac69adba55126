"""Common utility functions for tet commands."""
import re

from tetcurves.common.exceptions import TetInputError
from tetcurves.curve.weights import parse_weight_vector


def add_weights_argument(parser):
    """Add the positional weight vector accepted by every curve command."""
    parser.add_argument(
        'weights',
        nargs='+',
        metavar='<weights>',
        help='Weight vector as "a1,a2,a3,a4,a5,a6" (brackets optional) or six integers'
    )
    return parser


def parse_weight_arguments(values):
    """
    Turn the positional weight arguments into a WeightVector.

    Args:
        values (list): One comma-separated token or six integer tokens

    Returns:
        WeightVector: Parsed weights
    """
    return parse_weight_vector(' '.join(values))


def parse_max_weight(value):
    """
    Parse the maximal weight m of the counting commands.

    Args:
        value (str): Command-line token

    Returns:
        int: Non-negative integer
    """
    if not re.fullmatch(r"[0-9]+", value.strip()):
        raise TetInputError(f"Maximal weight must be a non-negative integer, got: {value!r}")
    return int(value)


def format_bool(value):
    """Render a boolean the way the tables show it."""
    if value is None:
        return ''
    return 'Yes' if value else 'No'


def format_weights(weights):
    """Render a weight vector as "[a1, a2, ...]"."""
    return str(list(weights))


def format_optional(value):
    return '' if value is None else value
