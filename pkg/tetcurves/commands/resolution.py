"""Generator and Betti number commands."""
import logging

import yaml

from tetcurves.common.basecommands import OutputRecord, TetListCommand
from tetcurves.common.exceptions import TetInputError
from tetcurves.common.functions import add_weights_argument, parse_weight_arguments
from tetcurves.curve.cells import betti_numbers, minimal_generators, resolution_document
from tetcurves.oracle.betti import graded_betti
from tetcurves.oracle.ideals import tetrahedral_ideal

LOG = logging.getLogger(__name__)


def _add_oracle_argument(parser, help_text):
    parser.add_argument(
        '--oracle',
        action='store_true',
        default=False,
        help=help_text
    )


class GeneratorsCommand(TetListCommand):
    """List the minimal generators of a tetrahedral curve's ideal."""

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        add_weights_argument(parser)
        _add_oracle_argument(parser, 'Compute the generators by intersecting line ideals (any curve)')
        return parser

    def build_record(self, parsed_args):
        weights = parse_weight_arguments(parsed_args.weights)
        if parsed_args.oracle:
            ideal = tetrahedral_ideal(weights)
            source = 'oracle'
        else:
            ideal = minimal_generators(weights)
            source = 'corner cut'

        generators = [
            {'monomial': str(g), 'exponents': list(g.exponents), 'degree': g.degree}
            for g in ideal.generators
        ]
        return OutputRecord(
            command='gens',
            input=list(weights),
            result={'source': source, 'count': len(generators), 'generators': generators},
        )

    def take_action(self, parsed_args):
        """Execute the gens command."""
        columns = ['Monomial', 'Exponents', 'Degree']
        rows = [
            [g['monomial'], ' '.join(str(e) for e in g['exponents']), g['degree']]
            for g in self.record.result['generators']
        ]
        return (columns, rows)


class BettiCommand(TetListCommand):
    """Show the graded Betti numbers of a tetrahedral curve's ideal."""

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        add_weights_argument(parser)
        _add_oracle_argument(parser, 'Compute the Betti numbers from upper Koszul complexes (any curve)')
        parser.add_argument(
            '--export',
            metavar='<path>',
            help='Write the cellular resolution as a YAML document ("-" for standard output)'
        )
        return parser

    def build_record(self, parsed_args):
        weights = parse_weight_arguments(parsed_args.weights)
        if parsed_args.oracle:
            table = graded_betti(tetrahedral_ideal(weights), self.limits.betti_generator_cap)
            source = 'oracle'
        else:
            table = betti_numbers(weights)
            source = 'closed form'

        result = {
            'source': source,
            'ranks': list(table.ranks),
            'entries': [
                {'homological_degree': i, 'internal_degree': j, 'rank': rank}
                for i, j, rank in table.rows()
            ],
            'linear': table.is_linear(),
        }

        if parsed_args.export:
            document = resolution_document(weights)
            self._export(document, parsed_args.export)
            result['export'] = parsed_args.export

        return OutputRecord(command='betti', input=list(weights), result=result)

    def _export(self, document, path):
        text = yaml.safe_dump(document, default_flow_style=False, sort_keys=False)
        if path == '-':
            self.app.stdout.write(text)
            return
        try:
            with open(path, 'w') as handle:
                handle.write(text)
        except OSError as e:
            raise TetInputError(f"Cannot write resolution export to {path}: {e}")
        LOG.info('wrote resolution export to %s', path)

    def take_action(self, parsed_args):
        """Execute the betti command."""
        columns = ['Homological Degree', 'Internal Degree', 'Rank']
        rows = [
            [entry['homological_degree'], entry['internal_degree'], entry['rank']]
            for entry in self.record.result['entries']
        ]
        return (columns, rows)
