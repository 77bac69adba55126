"""Invariants command."""
from tetcurves.common.basecommands import OutputRecord, TetShowCommand
from tetcurves.common.functions import add_weights_argument, format_optional, format_weights, parse_weight_arguments
from tetcurves.curve.invariants import curve_invariants


class InvariantsCommand(TetShowCommand):
    """Show degree, arithmetic genus and initial degree of a tetrahedral curve."""

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        add_weights_argument(parser)
        return parser

    def build_record(self, parsed_args):
        weights = parse_weight_arguments(parsed_args.weights)
        invariants = curve_invariants(weights, self.limits)
        return OutputRecord(command='invariants', input=list(weights), result=invariants.as_dict())

    def take_action(self, parsed_args):
        """Execute the invariants command."""
        result = self.record.result
        columns = [
            'Weights',
            'Degree',
            'Genus',
            'Genus Source',
            'Initial Degree',
            'Hilbert Scheme Dimension',
        ]
        values = [
            format_weights(result['weights']),
            result['degree'],
            result['genus'],
            result['genus_source'],
            format_optional(result['initial_degree']),
            format_optional(result['hilbert_scheme_dimension']),
        ]
        return (columns, values)
