"""Main shell application for the tet client."""
import sys
from cliff.app import App
from cliff.commandmanager import CommandManager
from tetcurves import __version__
from tetcurves.common.config import TetConfig


class TetApp(App):
    """Main application for the tet client."""

    def __init__(self):
        # Curve commands first, oracle cross-checks as a second group
        command_manager = CommandManager('tet.curve')
        command_manager.add_command_group('tet.oracle')

        super().__init__(
            description='Tetrahedral curve reduction, classification and resolution toolkit',
            version=__version__,
            command_manager=command_manager,
            deferred_help=True,
        )

        self._config = None

    def build_option_parser(self, description, version, argparse_kwargs=None):
        """Build option parser with global output and oracle arguments."""
        parser = super().build_option_parser(description, version, argparse_kwargs)

        tet_group = parser.add_argument_group('Output and Oracle Limits')
        tet_group.add_argument(
            '--json',
            action='store_true',
            default=False,
            help='Emit the structured output record as JSON instead of a table'
        )
        tet_group.add_argument(
            '--cap',
            type=int,
            metavar='<degree>',
            help='Largest degree the Hilbert enumeration may reach (overrides TET_HILBERT_DEGREE_CAP)'
        )
        tet_group.add_argument(
            '--generator-cap',
            type=int,
            metavar='<count>',
            help='Largest generator count accepted by the Betti oracle (overrides TET_BETTI_GENERATOR_CAP)'
        )

        return parser

    @property
    def config(self):
        """
        Get the validated configuration.

        Returns:
            TetConfig: Configuration built from --cap/--generator-cap and the environment
        """
        if self._config is None:
            config_overrides = {}
            if getattr(self.options, 'cap', None) is not None:
                config_overrides['hilbert_degree_cap'] = self.options.cap
            if getattr(self.options, 'generator_cap', None) is not None:
                config_overrides['betti_generator_cap'] = self.options.generator_cap

            config = TetConfig(config_overrides=config_overrides)
            config.validate()
            self._config = config
        return self._config

    def initialize_app(self, argv):
        """Initialize the application."""
        self.LOG.debug('initialize_app')

    def prepare_to_run_command(self, cmd):
        """Prepare to run a command."""
        self.LOG.debug('prepare_to_run_command %s', cmd.__class__.__name__)

    def clean_up(self, cmd, result, err):
        """Clean up after a command."""
        self.LOG.debug('clean_up %s', cmd.__class__.__name__)
        if err:
            self.LOG.debug('got an error: %s', err)


def main(argv=sys.argv[1:]):
    """Main entry point for the tet client."""
    app = TetApp()
    # No interactive shell: a bare `tet` lists the commands
    return app.run(list(argv) or ['help'])


if __name__ == '__main__':
    sys.exit(main())
