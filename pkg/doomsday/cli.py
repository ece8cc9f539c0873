#!/usr/bin/env python
# -*- coding: utf-8 -*-

import argparse
import json
import logging
import sys

import argcomplete
import click

from . import __version__, config
from .base import Solver
from .config import DEFAULT_SOLVER_CONFIG, save_solver_config
from .exceptions import InputError, ResourceLimit
from .gamefile import load_game
from .generator import GENERATOR_CLASSES, gen_random
from .results import export_dot, read_certificate, serialize_result

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_NO = 3


def to_bool(string):
    if type(string) is bool:
        return string
    return True if string[0] in ["Y", "y"] else False


class UsageError(InputError):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as `UsageError` so they exit with code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


class CLI(object):

    def __init__(self):
        self.var_args = None
        self.command = None
        self.solver = None

    def command_dispatcher(self, args=None):
        desc = ('doomsday - decide, certify and check doomsday equilibria '
                'of multi-player games on graphs.\n')
        parser = ArgumentParser(description=desc)
        parser.add_argument(
            '-v', '--version', action='version', version=__version__,
            help='Print doomsday version'
        )
        parser.add_argument(
            '--verbose', action='store_true', help='Print progress and debug logs')

        subparsers = parser.add_subparsers(title='subcommands', dest='command')
        subparsers.add_parser(
            'configure', help='Set solver limits. Run once')

        solve_parser = subparsers.add_parser(
            'solve', help='Decide whether a game admits a doomsday equilibrium.')
        solve_parser.add_argument('file', help='Game file.')
        solve_parser.add_argument(
            '--json', action='store_true', help='Print the result as JSON.')
        solve_parser.add_argument(
            '--dot', help='Write the arena with the certificate play to this DOT file.')

        check_parser = subparsers.add_parser(
            'check', help='Check a certificate against the equilibrium definition.')
        check_parser.add_argument('file', help='Game file.')
        check_parser.add_argument('certificate', help='Certificate (JSON or YAML).')

        gen_parser = subparsers.add_parser(
            'gen', help='Generate a random game file.')
        gen_parser.add_argument('--states', type=int, required=True)
        gen_parser.add_argument('--players', type=int, required=True)
        gen_parser.add_argument('--class', dest='objective_class', required=True,
                                choices=GENERATOR_CLASSES)
        gen_parser.add_argument('--seed', type=int, required=True)
        gen_parser.add_argument('--density', type=float,
                                default=config.SOLVER_CONFIG.get('edge_density', 0.3))
        gen_parser.add_argument('--empty-rate', type=float,
                                default=config.SOLVER_CONFIG.get('empty_set_rate', 0.1))
        gen_parser.add_argument('-o', '--output', help='File to write the game to.')

        dot_parser = subparsers.add_parser(
            'dot', help='Print a game as a Graphviz DOT graph.')
        dot_parser.add_argument('file', help='Game file.')
        dot_parser.add_argument('--certificate', help='Highlight the play of this certificate.')

        argcomplete.autocomplete(parser)
        args = parser.parse_args(args)
        self.var_args = vars(args)

        if not args.command:
            parser.print_help()
            return EXIT_OK

        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
        self.command = args.command
        self.solver = Solver.from_config(verbose=args.verbose)

        if self.command == 'configure':
            return self.configure()
        if self.command == 'solve':
            return self.solve(args.file, args.json, args.dot)
        if self.command == 'check':
            return self.check(args.file, args.certificate)
        if self.command == 'gen':
            return self.gen(args.states, args.players, args.objective_class, args.seed,
                            args.density, args.empty_rate, args.output)
        if self.command == 'dot':
            return self.dot(args.file, args.certificate)

    def configure(self):
        click.echo(click.style("doomsday", bold=True) +
                   " decide and certify doomsday equilibria!\n")

        settings = {}
        for key in ('node_budget', 'recursion_limit', 'oracle_budget', 'memory_bound'):
            default = config.SOLVER_CONFIG.get(key, DEFAULT_SOLVER_CONFIG[key])
            answer = input("Specify {} (default '{}'): ".format(key, default)) or default
            try:
                settings[key] = int(answer)
            except ValueError:
                raise UsageError('{} must be an integer'.format(key))

        formatted_json = json.dumps(settings, sort_keys=True, indent=4)
        click.echo("\nThis is your current settings file:\n")
        click.echo(click.style(formatted_json, fg="green", bold=True))

        confirm = input(
            "\nDoes this look good? (default 'y') [y/n]: ") or 'yes'
        if not to_bool(confirm):
            click.echo(
                "" + click.style("Please run configure once again", fg="red", bold=True))
            return EXIT_OK

        save_solver_config(settings)
        return EXIT_OK

    def solve(self, file_name, as_json=False, dot_file=None):
        game = load_game(file_name)
        verdict = self.solver.solve(game.arena, game.profile)
        if dot_file:
            with open(dot_file, 'w') as f:
                f.write(export_dot(game.arena, game.profile, verdict.certificate,
                                   game.name or 'game'))
        if as_json:
            click.echo(serialize_result(verdict), nl=False)
        elif verdict.exists:
            certificate = verdict.certificate
            click.echo(click.style("Doomsday equilibrium exists", fg="green", bold=True))
            click.echo("stem:  " + ' '.join(certificate.stem))
            click.echo("cycle: " + ' '.join(certificate.cycle))
        else:
            click.echo(click.style("No doomsday equilibrium", fg="red", bold=True))
        return EXIT_OK if verdict.exists else EXIT_NO

    def check(self, file_name, certificate_file):
        game = load_game(file_name)
        certificate = read_certificate(certificate_file)
        result = self.solver.check(game.arena, game.profile, certificate)
        if result.is_de:
            click.echo(click.style("Certificate is a doomsday equilibrium", fg="green", bold=True))
            return EXIT_OK
        violation = result.violation
        click.echo(click.style("Violation: ", fg="red", bold=True) + violation.describe())
        click.echo("stem:  " + ' '.join(violation.stem))
        click.echo("cycle: " + ' '.join(violation.cycle))
        return EXIT_NO

    def gen(self, states, players, objective_class, seed, density, empty_rate, output=None):
        text = gen_random(states, players, objective_class, density, seed, empty_rate)
        if output:
            with open(output, 'w') as f:
                f.write(text)
        else:
            click.echo(text, nl=False)
        return EXIT_OK

    def dot(self, file_name, certificate_file=None):
        game = load_game(file_name)
        certificate = read_certificate(certificate_file) if certificate_file else None
        click.echo(export_dot(game.arena, game.profile, certificate, game.name or 'game'),
                   nl=False)
        return EXIT_OK


def handle(args=None):
    try:
        cli = CLI()
        code = cli.command_dispatcher(args)
    except KeyboardInterrupt:
        code = EXIT_INPUT
    except ResourceLimit as e:
        click.echo(click.style("Error: ", fg='red', bold=True) + str(e), err=True)
        code = EXIT_RESOURCE
    except (InputError, IOError) as e:
        click.echo(click.style("Error: ", fg='red', bold=True) + str(e), err=True)
        code = EXIT_INPUT
    sys.exit(code)


if __name__ == '__main__':
    handle()
