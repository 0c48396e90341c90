"""
Command line of cubicfold.

Exit codes: 0 when no claim is a mismatch, 1 when at least one is, 2 on usage or configuration errors
"""
import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from ..claims.options import FORMATS, RunOptions
from ..claims.registry import GROUP_NAMES
from ..families.catalog import CATALOG_NAMES
from ..report.renderers import render
from ..utils.config import get_log_file_path
from ..utils.errors import CubicfoldError
from ..utils.logging import remove_file_handlers, setup_rotating_file_logger
from ..utils.timeouts import ClaimTimeoutError
from .commands import cmd_family, cmd_lattice, cmd_numerology, cmd_smooth, cmd_verify_all

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

DEFAULT_GRAM = '4,1,0;1,4,0;0,0,4'

# option destination -> default; the global flags may be given before or after the subcommand
GLOBAL_DEFAULTS = {'seed': 0, 'format': 'json', 'primes': [], 'threads': None, 'as_printed': False,
                   'timing': False, 'budget': None}


def gram_matrix(text: str) -> List[List[int]]:
    """Rows separated by ';', entries by ','"""
    try:
        return [[int(entry) for entry in row.split(',')] for row in text.split(';')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not a Gram matrix such as {DEFAULT_GRAM!r}')


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f'expected an integer >= 1, got {text}')
    return value


def _global_options() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    parser.add_argument('--seed', type=int, help='seed of the random family members (default 0)')
    parser.add_argument('--format', choices=FORMATS, help='output format (default json)')
    parser.add_argument('--prime', dest='primes', type=int, action='append',
                        help='prime for the finite-field certificates; repeat for several')
    parser.add_argument('--threads', type=positive_int, help='worker processes of the point scans')
    parser.add_argument('--as-printed', dest='as_printed', action='store_true',
                        help='check the printed data instead of the repaired data')
    parser.add_argument('--timing', action='store_true', help='record wall times in the output')
    parser.add_argument('--budget', type=positive_int, help='cap on enumeration work units')
    return parser


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = argparse.ArgumentParser(prog='cubicfold', parents=[common],
                                     description='Exact verification of claims on cubic fourfolds '
                                                 'with symplectic automorphisms')
    subparsers = parser.add_subparsers(dest='command', required=True)

    verify = subparsers.add_parser('verify', parents=[common], help='run the claim suite')
    verify.add_argument('target', choices=['all'])
    verify.add_argument('--skip', dest='skip_groups', action='append', default=[], metavar='GROUP',
                        help=f'skip a claim group; one of {", ".join(GROUP_NAMES)}')
    verify.add_argument('--only', dest='only_group', default=None, metavar='GROUP', help='run a single claim group')

    family = subparsers.add_parser('family', parents=[common], help='analyses of one catalog cubic')
    family.add_argument('name', choices=CATALOG_NAMES)
    family.add_argument('--dim', dest='analyses', action='append_const', const='dim')
    family.add_argument('--fixed-locus', dest='analyses', action='append_const', const='fixed_locus')
    family.add_argument('--invariants', dest='analyses', action='append_const', const='invariants')
    family.add_argument('--symplectic', dest='analyses', action='append_const', const='symplectic')

    smooth = subparsers.add_parser('smooth', parents=[common], help='smoothness certificates of one catalog cubic')
    smooth.add_argument('name', choices=CATALOG_NAMES)

    numerology = subparsers.add_parser('numerology', parents=[common], help='discriminant numerology')
    numerology.add_argument('--admissible', type=positive_int, metavar='N')
    numerology.add_argument('--fano', type=positive_int, metavar='N')
    numerology.add_argument('--equivariant', type=positive_int, metavar='N')

    lattice = subparsers.add_parser('lattice', parents=[common], help='invariants and norm vectors of a lattice')
    lattice.add_argument('--gram', type=gram_matrix, default=gram_matrix(DEFAULT_GRAM),
                         help=f'Gram matrix, rows separated by ";" (default {DEFAULT_GRAM})')
    lattice.add_argument('--norm', type=int)
    lattice.add_argument('--bound', type=positive_int)
    return parser


def run_options(args: argparse.Namespace) -> RunOptions:
    values = {key: getattr(args, key, default) for key, default in GLOBAL_DEFAULTS.items()}
    values['skip_groups'] = getattr(args, 'skip_groups', [])
    values['only_group'] = getattr(args, 'only_group', None)
    return RunOptions(**values)


def _configure_logging() -> None:
    load_dotenv()
    logger = logging.getLogger()
    log_file_path = get_log_file_path()
    if log_file_path:
        setup_rotating_file_logger(logger, log_file_path)

    logging.disable(getattr(logging, os.getenv('LOGGING_LEVEL_DISABLE', 'NOTSET')))


def main(argv: Optional[List[str]] = None) -> int:
    _configure_logging()
    try:
        return _run(build_parser().parse_args(argv))
    finally:
        remove_file_handlers(logging.getLogger())


def _run(args: argparse.Namespace) -> int:
    try:
        options = run_options(args)
        if args.command == 'verify':
            report = cmd_verify_all(options)
            sys.stdout.write(render(report, options.format))
            return EXIT_MISMATCH if report.exit_code() else EXIT_OK

        if args.command == 'family':
            output = cmd_family(args.name, args.analyses or [], options)
        elif args.command == 'smooth':
            output = cmd_smooth(args.name, options)
        elif args.command == 'numerology':
            output = cmd_numerology(args.admissible, args.fano, args.equivariant, options)
        else:
            output = cmd_lattice(args.gram, args.norm, args.bound, options)
    except (CubicfoldError, ClaimTimeoutError, ValidationError) as exp:
        logging.error(f'{args.command} \n{exp}')
        sys.stderr.write(f'cubicfold: error: {exp}\n')
        return EXIT_USAGE

    sys.stdout.write(output)
    return EXIT_OK
