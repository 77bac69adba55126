"""Verify command."""
from tetcurves.common.basecommands import OutputRecord, TetListCommand
from tetcurves.common.constants import EXIT_OK
from tetcurves.common.exceptions import VerificationError
from tetcurves.common.functions import add_weights_argument, parse_weight_arguments
from tetcurves.verification import require_passed, run_checks


class VerifyCommand(TetListCommand):
    """Cross-check every closed formula for a curve against the ideal oracle."""

    checks = ()

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        add_weights_argument(parser)
        return parser

    def build_record(self, parsed_args):
        weights = parse_weight_arguments(parsed_args.weights)
        self.checks = run_checks(weights, self.limits)
        return OutputRecord(
            command='verify',
            input=list(weights),
            result={
                'passed': not any(check.failed for check in self.checks),
                'checks': [check.as_dict() for check in self.checks],
            },
        )

    def exit_status(self, record):
        # The table is already written; a failed check only changes the exit code
        try:
            require_passed(self.checks)
        except VerificationError as e:
            self.app.stderr.write(f"Error: {e}\n")
            return e.exit_code
        return EXIT_OK

    def take_action(self, parsed_args):
        """Execute the verify command."""
        columns = ['Check', 'Status', 'Detail']
        rows = [[c['check'], c['status'], c['detail']] for c in self.record.result['checks']]
        return (columns, rows)
