"""Classify command."""
from tetcurves.common.basecommands import OutputRecord, TetShowCommand
from tetcurves.common.functions import add_weights_argument, format_bool, format_weights, parse_weight_arguments
from tetcurves.curve.classify import LINEAR_UNKNOWN, classify, has_linear_resolution, schwartau_acm


class ClassifyCommand(TetShowCommand):
    """Classify a tetrahedral curve: ACM, Buchsbaum, diameter, known unobstructedness."""

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        add_weights_argument(parser)
        parser.add_argument(
            '--oracle',
            action='store_true',
            default=False,
            help='Settle an unknown linear-resolution status with the graded Betti oracle'
        )
        return parser

    def build_record(self, parsed_args):
        weights = parse_weight_arguments(parsed_args.weights)
        result = classify(weights).as_dict()

        if parsed_args.oracle and result['linear_resolution'] == LINEAR_UNKNOWN:
            linear = has_linear_resolution(weights, self.limits.betti_generator_cap)
            if linear is not None:
                result['linear_resolution'] = 'yes (oracle)' if linear else 'no (oracle)'

        a1, a2, a3, a4, a5, a6 = weights
        if a2 == 0 and a5 == 0:
            result['schwartau_acm'] = schwartau_acm(a1, a3, a4, a6)

        return OutputRecord(command='classify', input=list(weights), result=result)

    def take_action(self, parsed_args):
        """Execute the classify command."""
        result = self.record.result

        columns = [
            'Weights',
            'Minimal Curve',
            'Reductions',
            'Trivial',
            'S-Minimal',
            'ACM',
            'Buchsbaum',
            'HR Diameter',
            'Known Unobstructed',
            'Family',
            'Linear Resolution',
            'Unique Minimal',
        ]
        values = [
            format_weights(result['weights']),
            format_weights(result['minimal_weights']),
            result['reduction_count'],
            format_bool(result['trivial']),
            format_bool(result['s_minimal']),
            format_bool(result['acm']),
            format_bool(result['buchsbaum']),
            result['hr_diameter'],
            format_bool(result['known_unobstructed']),
            result['family'] or '',
            result['linear_resolution'],
            format_bool(result['unique_minimal']),
        ]

        if 'schwartau_acm' in result:
            columns.append('Schwartau ACM')
            values.append(format_bool(result['schwartau_acm']))

        return (columns, values)
