#!/usr/bin/env python3

"""Command-line interface for python-ghalg."""

# Copyright © 2019 Timothy Pederick.
#
# This file is part of python-ghalg.
#
# python-ghalg is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# python-ghalg is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with python-ghalg. If not, see <http://www.gnu.org/licenses/>.

__all__ = ['main', 'corpus_names', 'corpus_path',
           'parse_session', 'SessionDocument', 'Directive',
           'run_checks', 'ReportRecord', 'emit_report', 'read_report']

# Standard library imports.
import argparse
import logging
from pathlib import Path
import sys

# Local imports.
from .. import config
from ..errors import GhalgError
from .report import HUMAN, MACHINE, ReportRecord, emit_report, read_report
from .runner import contradictions, run_checks
from .session import Directive, SessionDocument, parse_session

logger = logging.getLogger(__name__)

CORPUS = Path(__file__).parent / 'corpus'
SUFFIX = '.gsession'

# Exit statuses.
OK = 0
CONTRADICTED = 1
USAGE = 2


def corpus_names():
    """The names of the bundled example sessions."""
    return sorted(path.stem for path in CORPUS.glob('*' + SUFFIX))


def corpus_path(name):
    path = CORPUS / (name + SUFFIX)
    if not path.is_file():
        raise FileNotFoundError('no corpus session named {!r} (try '
                                "'ghalg corpus list')".format(name))
    return path


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError('must be a positive integer')
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError('must be a non-negative integer')
    return value


def _read(path):
    return Path(path).read_text(encoding='utf-8')


def _validate(args):
    document = parse_session(_read(args.file))
    print('{}: valid, {} check(s)'.format(args.file,
                                          len(document.directives)))
    return OK


def _run_text(text, args):
    document = parse_session(text)
    records = run_checks(document, args.jobs, args.horizon, args.seed)
    sys.stdout.write(emit_report(records, args.format, args.timings))
    failures = contradictions(records, document.expectations)
    for check_id, expected, found in failures:
        print('{}: expected {}, found {}'.format(check_id, expected, found),
              file=sys.stderr)
    return CONTRADICTED if failures else OK


def _run(args):
    return _run_text(_read(args.file), args)


def _corpus(args):
    if args.action == 'list':
        for name in corpus_names():
            print(name)
        return OK
    if args.name is None:
        raise FileNotFoundError("'corpus run' needs a session name")
    return _run_text(_read(corpus_path(args.name)), args)


def _parser():
    parser = argparse.ArgumentParser(
        prog='ghalg',
        description='Check Gorenstein properties of finite-dimensional '
                    'algebras, modules and ring maps.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + config.ENGINE_VERSION)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-v) or details (-vv) to stderr')
    running = argparse.ArgumentParser(add_help=False)
    running.add_argument('--horizon', type=_positive, default=None,
                         help='resolution length and Ext range for checks '
                              'that give none (default {})'.format(
                                  config.DEFAULT_HORIZON))
    running.add_argument('--seed', type=_non_negative, default=0,
                         help='seed for checks that give none')
    running.add_argument('--jobs', type=_positive, default=1,
                         help='worker processes')
    running.add_argument('--format', choices=(HUMAN, MACHINE), default=HUMAN)
    running.add_argument('--timings', action='store_true',
                         help='include elapsed times in the report')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    validate = commands.add_parser('validate', help='parse and validate a '
                                   'session file')
    validate.add_argument('file')
    validate.set_defaults(handler=_validate)

    run = commands.add_parser('run', parents=[running],
                              help='run the checks of a session file')
    run.add_argument('file')
    run.set_defaults(handler=_run)

    corpus = commands.add_parser('corpus', parents=[running],
                                 help='list or run the bundled sessions')
    corpus.add_argument('action', choices=('list', 'run'))
    corpus.add_argument('name', nargs='?')
    corpus.set_defaults(handler=_corpus)
    return parser


def main(argv=None):
    """Run the command line.

    Returns:
        0 unless a check expected Proven is found Refuted, which gives 1,
        or the input is unreadable or invalid, which gives 2.

    """
    args = _parser().parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                      logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return args.handler(args)
    except (GhalgError, OSError) as exc:
        print('ghalg: {}'.format(exc), file=sys.stderr)
        return USAGE
