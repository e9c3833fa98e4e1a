"""
The command line commands. Each takes the parsed arguments, prints its
result to stdout and returns the exit code.
"""

from __future__ import annotations

from argparse import Namespace
from fractions import Fraction
import logging
from pathlib import Path

from . import output
from .check_file import parse_check_file
from .smap import parse_smap, render_smap
from ..analysis import check_identity, detect, euler_emergence, tee
from ..beta.engine import colored_counts, island_counts
from ..beta.coloring import Coloring
from ..closedforms import BMode, B_line, DMode, D_circle, closed_beta
from ..graphs.embedded import EmbeddedGraph, face_count
from ..poly import IntPoly
from ..transforms.script import parse_script, run_script
from ..utils import (EXIT_CHECK_FAILED, EXIT_OK, ColoringError, ParseError,
                     RangeError)

_log = logging.getLogger(__name__)


def _read(path: str) -> str:
    return Path(path).read_text(encoding='utf-8')


def _load(path: str) -> tuple[EmbeddedGraph, Coloring | None]:
    _log.debug(f"Reading map document '{path}'")
    return parse_smap(_read(path))


def _emit(args: Namespace, data: dict, text: str) -> None:
    print(output.to_json(data) if args.json else text)


def faces(args: Namespace) -> int:
    eg, _ = _load(args.file)
    data = {'faces': face_count(eg, eg.marked_vertices), 'genus': eg.genus}
    _emit(args, data, f"faces: {data['faces']}\ngenus: {data['genus']}")
    return EXIT_OK


def beta(args: Namespace) -> int:
    eg, col = _load(args.file)
    if args.colored:
        if col is None:
            raise ColoringError(attr='coloring',
                                msg='the document has no color directives')
        counts = colored_counts(eg, col, args.force)
    else:
        counts = island_counts(eg, args.threads, args.force)

    data = output.summary(eg, counts)
    _emit(args, data, output.summary_text(data))
    return EXIT_OK


def counts(args: Namespace) -> int:
    eg, _ = _load(args.file)
    data = output.summary(eg, island_counts(eg, args.threads, args.force))
    _emit(args, data, ' '.join(str(c) for c in data['counts']))
    return EXIT_OK


def transform(args: Namespace) -> int:
    eg, _ = _load(args.file)
    result = run_script(eg, parse_script(_read(args.script)))
    data = output.summary(result,
                          island_counts(result, args.threads, args.force))
    if args.json:
        data['document'] = render_smap(result)
        print(output.to_json(data))
    else:
        print(render_smap(result) + '\n' + output.summary_text(data))
    return EXIT_OK


def check(args: Namespace) -> int:
    inst = parse_check_file(_read(args.file))
    residual = check_identity(inst, args.force)
    data = {'kind': str(inst.kind), 'residual': residual.to_json(),
            'holds': residual.is_zero()}
    _emit(args, data, f'{inst.kind}: residual {residual}')
    return EXIT_OK if residual.is_zero() else EXIT_CHECK_FAILED


def detect_command(args: Namespace) -> int:
    if args.poly is not None:
        if args.n is None:
            raise RangeError(attr='n',
                             msg='--n is required with --poly')
        try:
            p = IntPoly.parse(args.poly)
        except ValueError:
            raise ParseError(attr='poly',
                             msg='coefficients must be integers', line=1)
        n = args.n
    elif args.file is not None:
        eg, _ = _load(args.file)
        p = island_counts(eg, args.threads, args.force).beta_total()
        n = eg.vertex_count
    else:
        raise RangeError(attr='input', msg='give a map document or --poly')

    result = detect(p, n)
    text = f'{result.classification}'
    if result.theorem:
        text += f' ({result.theorem}; assumes ' + \
                ', '.join(result.hypotheses) + ')'
    if result.loops is not None:
        text += f'\nloops: {result.loops}\nparallels: {result.parallels}'
    if result.c is not None:
        text += f'\nc: {result.c}'
    _emit(args, result.to_json(), text)
    return EXIT_OK


def euler(args: Namespace) -> int:
    eg, _ = _load(args.file)
    result = euler_emergence(eg, args.allow_multigraph, args.force)
    data = {'lhs': result.lhs, 'rhs': result.rhs,
            'euler_characteristic': result.euler_characteristic,
            'faces': result.faces,
            'recursion_residual': result.recursion_residual.to_json(),
            'holds': result.holds}
    _emit(args, data,
          f'signed island counts: {result.lhs}\n'
          f'chi - 2f:             {result.rhs}\n'
          f'recursion residual:   {result.recursion_residual}')
    return EXIT_OK if result.holds else EXIT_CHECK_FAILED


def closedform(args: Namespace) -> int:
    p = closed_beta(args.kind, args.n,
                    separating=not args.non_separating,
                    loops=args.loops, parallels=args.parallels)
    _emit(args, {'beta_total': p.to_json()}, str(p))
    return EXIT_OK


def appendix(args: Namespace) -> int:
    if args.which == 'B':
        func, modes = B_line, [m.value for m in BMode]
    else:
        func, modes = D_circle, [m.value for m in DMode]
        # Only brute force is defined at m = n
        if args.m == args.n:
            modes = [DMode.BRUTE.value]
    if args.mode is not None:
        known = [m.value for m in (BMode if args.which == 'B' else DMode)]
        if args.mode not in known:
            raise RangeError(attr='mode',
                             msg=f"{args.which} has no mode '{args.mode}'")
        modes = [args.mode]

    values = {mode: func(args.n, args.m, mode) for mode in modes}
    agree = len(set(values.values())) == 1
    if not agree:
        _log.error(f'Modes disagree for {args.which}({args.n}, {args.m}): '
                   f'{values}')
    value = next(iter(values.values()))
    _emit(args, {'value': value, 'modes': values, 'agree': agree},
          str(value) if agree else
          '\n'.join(f'{m}: {v}' for m, v in values.items()))
    return EXIT_OK if agree else EXIT_CHECK_FAILED


def tee_command(args: Namespace) -> int:
    try:
        omega = Fraction(args.omega)
    except (ValueError, ZeroDivisionError):
        raise ParseError(attr='omega',
                         msg=f"'{args.omega}' is not a rational number",
                         line=1)
    if args.value is not None:
        at_minus1 = args.value
    elif args.file is not None:
        eg, _ = _load(args.file)
        at_minus1 = island_counts(eg, args.threads, args.force) \
            .beta_total()(-1)
    else:
        raise RangeError(attr='input', msg='give a map document or --value')

    result = tee(at_minus1, omega)
    _emit(args, {'beta_at_minus1': at_minus1, 'omega': str(omega),
                 'tee': str(result)}, str(result))
    return EXIT_OK


COMMANDS = {
    'faces': faces,
    'beta': beta,
    'counts': counts,
    'transform': transform,
    'check': check,
    'detect': detect_command,
    'euler': euler,
    'closedform': closedform,
    'appendix': appendix,
    'tee': tee_command,
}
