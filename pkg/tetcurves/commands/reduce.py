"""Reduce command."""
from tetcurves.common.basecommands import OutputRecord, TetCommand
from tetcurves.common.functions import add_weights_argument, format_weights, parse_weight_arguments
from tetcurves.curve.weights import canonicalize, minimal_results_all_choices, reduce_to_minimal


class ReduceCommand(TetCommand):
    """Reduce a tetrahedral curve to an S-minimal curve of its even liaison class."""

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        add_weights_argument(parser)
        parser.add_argument(
            '--trace',
            action='store_true',
            default=False,
            help='Print every basic double link of the reduction'
        )
        parser.add_argument(
            '--all-choices',
            action='store_true',
            default=False,
            help='Also follow every maximal-facet choice and report the distinct S-minimal results'
        )
        return parser

    def build_record(self, parsed_args):
        weights = parse_weight_arguments(parsed_args.weights)
        trace = reduce_to_minimal(weights)

        result = {'minimal': list(trace.result), 'reductions': trace.count}
        if parsed_args.all_choices:
            results = minimal_results_all_choices(weights)
            result['all_choices'] = sorted(list(w) for w in results)
            result['all_choices_up_to_symmetry'] = sorted({tuple(canonicalize(w)) for w in results})

        return OutputRecord(
            command='reduce',
            input=list(weights),
            result=result,
            trace=[step.as_dict() for step in trace.steps],
        )

    def take_action(self, parsed_args):
        """Execute the reduce command."""
        record = self.record
        out = self.app.stdout

        out.write(f"Minimal curve to {format_weights(record.input)} is {format_weights(record.result['minimal'])}\n")
        out.write(f"It is obtained after {record.result['reductions']} reduction(s).\n")

        if parsed_args.trace:
            for number, step in enumerate(record.trace, start=1):
                exponents = ', '.join(str(e) for e in step['F'])
                out.write(f"  {number}. facet {step['facet']}: F = ({exponents}), G = {step['G']}"
                          f" -> {format_weights(step['after'])}\n")

        if parsed_args.all_choices:
            classes = record.result['all_choices_up_to_symmetry']
            out.write(f"Distinct S-minimal results over all maximal-facet choices: "
                      f"{len(record.result['all_choices'])} ({len(classes)} up to symmetry)\n")
        return 0
