# -*- coding: utf-8 -*-
"""
Command line front end.

Every subcommand reads at most one system document (a path, or ``-`` for
stdin), calls one library operation and writes its result to stdout as JSON
(``--format json``, the default) or as text tables (``--format table``).
Logs go to stderr.  Exit codes: 0 on success, 1 on domain errors, 2 on usage
and parse errors.

A negative rational after ``--lambda`` or ``--alphas`` is taken as the option's
value, so ``--lambda -1/6`` and ``--lambda=-1/6`` are the same.
"""
import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, List, Optional

from rigidconv import __version__
from rigidconv.core.errors import (NonRationalSpectrum, RigidConvError,
                                   UsageError)
from rigidconv.core.models.document import (parse_system, system_document,
                                            to_json)
from rigidconv.core.models.system import FuchsianSystem, RankOneTwist
from rigidconv.core.settings import SettingsKey, get_int, get_value
from rigidconv.core.types.enumerations import LOG_LEVEL_MAP, OutputFormat
from rigidconv.lib import corpus
from rigidconv.lib.arithmetic import (h_bound, inequality_report,
                                      nilpotency_sweep, rho_truncated)
from rigidconv.lib.convolution import mc, prune_apparent
from rigidconv.lib.etc import parse_range
from rigidconv.lib.exact.rational import parse_rational
from rigidconv.lib.fuchsian import (is_absolutely_irreducible,
                                    is_non_resonant, is_rigid,
                                    rigidity_index, spectra, twist)
from rigidconv.lib.harness import equivalence_harness
from rigidconv.lib.katz import katz_reduce, replay
from .utils import configure_logging, render_table

__all__ = ['attach_negative_values', 'build_parser', 'run', 'main']

_log = logging.getLogger(__name__)

# Options whose values may be negative rationals or lists of them
_VALUE_OPTIONS = frozenset({'--lambda', '--alphas'})
_NEGATIVE_VALUE = re.compile(r'^-\d+(/\d+)?(,-?\d+(/\d+)?)*$')


def attach_negative_values(argv: List[str]) -> List[str]:
    """Rewrite ``--lambda -1/6`` as ``--lambda=-1/6``; argparse would read
    the value as an unknown option"""
    result = []
    for token in argv:
        if result and result[-1] in _VALUE_OPTIONS \
                and _NEGATIVE_VALUE.match(token):
            result[-1] = f'{result[-1]}={token}'
        else:
            result.append(token)
    return result


def _read_system(path: str) -> FuchsianSystem:
    if path == '-':
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding='utf-8')
        except OSError as e:
            raise UsageError(f'cannot read {path}: {e.strerror}', path=path)
    return parse_system(text)


def _rational_option(value: Optional[str], option: str):
    if value is None:
        raise UsageError(f'{option} is required', path=option)
    try:
        return parse_rational(value)
    except RigidConvError as e:
        raise UsageError(e.message, path=option)


def _range_option(value: Optional[str], lo: SettingsKey, hi: SettingsKey):
    if value is None:
        return get_int(lo), get_int(hi)
    return parse_range(value)


def cmd_validate(args) -> Any:
    system = _read_system(args.file)
    try:
        non_resonant = is_non_resonant(system)
    except NonRationalSpectrum:
        non_resonant = None
    return {'system': system, 'spectra': spectra(system),
            'irreducible': is_absolutely_irreducible(system),
            'non_resonant': non_resonant}


def cmd_mc(args) -> Any:
    system = _read_system(args.file)
    result = mc(system, _rational_option(args.lam, '--lambda'))
    return prune_apparent(result) if args.prune else result


def cmd_twist(args) -> Any:
    system = _read_system(args.file)
    if not args.alphas:
        raise UsageError('--alphas is required', path='--alphas')
    alphas = [_rational_option(a, '--alphas') for a in args.alphas.split(',')]
    return twist(system, RankOneTwist(alphas))


def cmd_pcurvature(args) -> Any:
    system = _read_system(args.file)
    primes = _range_option(args.primes, SettingsKey.PrimesLo,
                           SettingsKey.PrimesHi)
    lam = None if args.lam is None else _rational_option(args.lam, '--lambda')
    return nilpotency_sweep(system, primes, lam=lam)


def cmd_rho(args) -> Any:
    system = _read_system(args.file)
    window = parse_range(args.window) if args.window else None
    return rho_truncated(system, args.smax, window=window,
                         extra_prime_bound=args.pmax)


def cmd_hbound(args) -> Any:
    if args.value is not None and args.lam is not None:
        raise UsageError('give lambda either positionally or as --lambda')
    value = args.value if args.value is not None else args.lam
    return h_bound(_rational_option(value, '--lambda'))


def cmd_rigidity(args) -> Any:
    system = _read_system(args.file)
    return {'index': rigidity_index(system),
            'irreducible': is_absolutely_irreducible(system),
            'rigid': is_rigid(system)}


def cmd_katz(args) -> Any:
    system = _read_system(args.file)
    trace = katz_reduce(system)
    payload = {'trace': trace.steps, 'terminal': trace.terminal}
    if args.replay:
        replay(trace)
        payload['replay'] = 'isomorphic'
    return payload


def cmd_check(args) -> Any:
    system = _read_system(args.file)
    primes = _range_option(args.primes, SettingsKey.PrimesLo,
                           SettingsKey.PrimesHi)
    return equivalence_harness(system, primes, args.smax)


def cmd_inequality(args) -> Any:
    system = _read_system(args.file)
    return inequality_report(system, _rational_option(args.lam, '--lambda'),
                             args.smax)


def cmd_examples(args) -> Any:
    if args.name is None:
        return corpus.names()
    try:
        return system_document(corpus.get(args.name))
    except KeyError as e:
        raise UsageError(e.args[0], path='name')


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=[f.value for f in OutputFormat],
                        default=OutputFormat.JSON.value,
                        help='output format (default json)')
    common.add_argument('--log-level', choices=list(LOG_LEVEL_MAP),
                        default=None, help='stderr log level')

    parser = argparse.ArgumentParser(
        prog='rigidconv', description='Exact middle convolution, Katz '
        'reduction and arithmetic invariants of Fuchsian systems over Q')
    parser.add_argument('--version', action='version',
                        version=f'%(prog)s {__version__}')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    def add(name, func, help_text, system=True):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        if system:
            sub.add_argument('file', help="system document, '-' for stdin")
        sub.set_defaults(func=func)
        return sub

    add('validate', cmd_validate, 'check a system and list its local spectra')

    sub = add('mc', cmd_mc, 'middle convolution')
    sub.add_argument('--lambda', dest='lam', required=True)
    sub.add_argument('--prune', action='store_true',
                     help='drop points with zero residue')

    sub = add('twist', cmd_twist, 'twist by a rank one system')
    sub.add_argument('--alphas', required=True,
                     help='comma separated exponents, one per point')

    sub = add('pcurvature', cmd_pcurvature, 'p-curvature sweep')
    sub.add_argument('--primes', help='prime range LO..HI')
    sub.add_argument('--lambda', dest='lam',
                     help='also mark primes dividing the denominator as bad')

    sub = add('rho', cmd_rho, 'truncated global inverse radius')
    sub.add_argument('--smax', type=int, default=None)
    sub.add_argument('--window', help='levels LO..HI')
    sub.add_argument('--pmax', type=int, default=None,
                     help='consider every prime up to this bound')

    sub = add('hbound', cmd_hbound, 'the Kummer bound H(lambda)', system=False)
    sub.add_argument('value', nargs='?', default=None)
    sub.add_argument('--lambda', dest='lam')

    add('rigidity', cmd_rigidity, 'index of rigidity')

    sub = add('katz', cmd_katz, 'Katz reduction to rank one')
    sub.add_argument('--replay', action='store_true',
                     help='rebuild the input from the trace and compare')

    sub = add('check', cmd_check, 'arithmetic evidence along the reduction')
    sub.add_argument('--primes', help='prime range LO..HI')
    sub.add_argument('--smax', type=int, default=32)

    sub = add('inequality', cmd_inequality, 'radii across a convolution')
    sub.add_argument('--lambda', dest='lam', required=True)
    sub.add_argument('--smax', type=int, default=None)

    sub = add('examples', cmd_examples, 'shipped example systems',
              system=False)
    sub.add_argument('name', nargs='?', default=None)
    return parser


def _render(payload: Any, fmt: str) -> str:
    text = to_json(payload)
    if fmt == OutputFormat.TABLE.value:
        return render_table(json.loads(text))
    return text


def run(argv: List[str] = None) -> int:
    """Execute a command line; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(attach_negative_values(
            sys.argv[1:] if argv is None else argv))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.log_level or get_value(SettingsKey.LogLevel))
    try:
        payload = args.func(args)
    except RigidConvError as e:
        _log.error("%s: %s", e.__class__.__name__, e)
        print(json.dumps(e.to_json(), indent=2))
        return e.exit_code
    except ValueError as e:
        _log.error("%s", e)
        print(json.dumps({'error': e.__class__.__name__, 'message': str(e),
                          'path': None}, indent=2))
        return UsageError.exit_code
    print(_render(payload, args.format))
    return 0


def main() -> int:
    return run(sys.argv[1:])
