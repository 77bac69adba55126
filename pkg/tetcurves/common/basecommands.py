"""Base command classes for tet CLI commands."""
import json
import time
from dataclasses import dataclass, field
from typing import Any, List, Optional

from cliff.command import Command
from cliff.lister import Lister
from cliff.show import ShowOne

from tetcurves.common.constants import EXIT_OK
from tetcurves.common.exceptions import TetError


@dataclass
class OutputRecord:
    """Structured result of one command, emitted as-is with --json."""

    command: str
    input: Any
    result: Any
    trace: Optional[List[dict]] = None
    diagnostics: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            'command': self.command,
            'input': self.input,
            'result': self.result,
            'trace': self.trace,
            'diagnostics': self.diagnostics,
        }


class TetCommandMixin:
    """
    Mixin providing configuration access, error handling and --json output.

    Subclasses implement build_record(parsed_args) returning an OutputRecord
    and, for table output, take_action formatting self.record.

    Note: This mixin expects to be used with Cliff command classes that
    provide the 'app' attribute.
    """

    record = None

    @property
    def config(self):
        """Get the validated configuration from the app."""
        return self.app.config  # type: ignore

    @property
    def limits(self):
        """Get the oracle caps in force (shortcut)."""
        return self.config.limits

    @property
    def json_output(self):
        return bool(getattr(self.app.options, 'json', False))  # type: ignore

    def build_record(self, parsed_args):
        raise NotImplementedError

    def exit_status(self, record):
        """Process exit code for a successfully computed record."""
        return EXIT_OK

    def handle_tet_error(self, error):
        """
        Standardized error handling for all commands.

        Args:
            error: TetError instance

        Raises:
            SystemExit: With the exit code of the error class
        """
        self.app.stderr.write(f"Error: {error}\n")  # type: ignore
        raise SystemExit(error.exit_code)

    def compute(self, parsed_args):
        """Build the record, timing it and translating errors into exits."""
        started = time.perf_counter()
        try:
            record = self.build_record(parsed_args)
            record.diagnostics['elapsed_ms'] = round((time.perf_counter() - started) * 1_000, 3)
            record.diagnostics['caps'] = self.limits.as_dict()
        except TetError as e:
            self.handle_tet_error(e)
        except Exception as e:
            raise SystemExit(f"Unexpected error: {e}")
        return record

    def run(self, parsed_args):
        self.record = self.compute(parsed_args)
        if self.json_output:
            self.app.stdout.write(json.dumps(self.record.as_dict(), indent=2) + '\n')  # type: ignore
        else:
            super().run(parsed_args)
        return self.exit_status(self.record)


class TetShowCommand(TetCommandMixin, ShowOne):
    """Base class for tet show commands."""
    pass


class TetListCommand(TetCommandMixin, Lister):
    """Base class for tet list commands."""
    pass


class TetCommand(TetCommandMixin, Command):
    """Base class for tet commands writing plain text."""
    pass
