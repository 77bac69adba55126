"""Enumerate and count commands for S-minimal curves."""
from tetcurves.common.basecommands import OutputRecord, TetListCommand, TetShowCommand
from tetcurves.common.functions import format_weights, parse_max_weight
from tetcurves.curve.invariants import (
    count_minimal,
    count_minimal_lower_bound,
    degree,
    enumerate_minimal,
    genus_minimal,
)


def _add_max_weight_argument(parser):
    parser.add_argument(
        'max_weight',
        metavar='<m>',
        help='The maximal weight, carried by line 6'
    )


class EnumerateCommand(TetListCommand):
    """List all S-minimal curves whose largest weight m sits on line 6."""

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        _add_max_weight_argument(parser)
        return parser

    def build_record(self, parsed_args):
        m = parse_max_weight(parsed_args.max_weight)
        curves = [
            {'weights': list(w), 'degree': degree(w), 'genus': genus_minimal(w)}
            for w in enumerate_minimal(m)
        ]
        return OutputRecord(command='enumerate', input=m, result={'count': len(curves), 'curves': curves})

    def take_action(self, parsed_args):
        """Execute the enumerate command."""
        columns = ['Weights', 'Degree', 'Genus']
        rows = [
            [format_weights(curve['weights']), curve['degree'], curve['genus']]
            for curve in self.record.result['curves']
        ]
        return (columns, rows)


class CountCommand(TetShowCommand):
    """Count the S-minimal curves whose largest weight m sits on line 6."""

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        _add_max_weight_argument(parser)
        return parser

    def build_record(self, parsed_args):
        m = parse_max_weight(parsed_args.max_weight)
        result = {
            'minimal': count_minimal(m),
            'lower_bound': count_minimal_lower_bound(m),
            'all': (m + 1) ** 5,
        }
        return OutputRecord(command='count', input=m, result=result)

    def take_action(self, parsed_args):
        """Execute the count command."""
        result = self.record.result
        columns = ['Max Weight', 'Minimal Curves', 'Lower Bound', 'All Curves']
        values = [self.record.input, result['minimal'], result['lower_bound'], result['all']]
        return (columns, values)
