from argparse import ArgumentParser, Namespace
import logging
import sys

from .cli import COMMANDS
from .closedforms import BMode, ClosedKind, DMode
from .conf import logger_conf, settings
from .conf.default_config_entry import to_int, to_log_level
from .utils import handle_err


def _positive(s: str) -> int:
    return to_int(s, min_value=1)


def parse_args(argv: list[str] | None = None) -> Namespace:
    parser = ArgumentParser(
        prog='islandpoly',
        description='Island boundary polynomials of embedded graphs.'
    )
    parser.add_argument('--json', action='store_true',
                        help='Print results as JSON.')
    parser.add_argument('--threads', type=_positive, default=None,
                        help='Worker processes for enumeration. Defaults '
                             'to the ENUMERATION_THREADS setting.')
    parser.add_argument('--force', action='store_true',
                        help='Enumerate even above the vertex limit.')
    parser.add_argument('--log-level', type=to_log_level, default=None,
                        help='Console log level, such as DEBUG or INFO.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('faces', help='Face count and genus of a graph.')
    p.add_argument('file', help='A .smap document.')

    p = sub.add_parser('beta', help='The island boundary polynomial.')
    p.add_argument('file', help='A .smap document.')
    p.add_argument('--colored', action='store_true',
                   help="Use the document's coloring.")

    p = sub.add_parser('counts', help='The island boundary counts.')
    p.add_argument('file', help='A .smap document.')

    p = sub.add_parser('transform', help='Apply an operation script.')
    p.add_argument('file', help='A .smap document.')
    p.add_argument('script', help='The operation script.')

    p = sub.add_parser('check', help='Check an identity on an instance.')
    p.add_argument('file', help='An identity check file.')

    p = sub.add_parser('detect', help='Classify a polynomial.')
    p.add_argument('file', nargs='?', default=None,
                   help='A .smap document to compute the polynomial of.')
    p.add_argument('--poly', default=None,
                   help="Coefficients from the constant term up, such as "
                        "'4,9,6,1'.")
    p.add_argument('--n', type=_positive, default=None,
                   help='The vertex count, with --poly.')

    p = sub.add_parser('euler', help='Recover chi - 2f from island counts.')
    p.add_argument('file', help='A .smap document.')
    p.add_argument('--allow-multigraph', action='store_true',
                   help='Run on graphs with loops or parallel edges.')

    p = sub.add_parser('closedform', help='A polynomial by formula.')
    p.add_argument('kind', choices=[k.value for k in ClosedKind])
    p.add_argument('n', type=int)
    p.add_argument('--non-separating', action='store_true',
                   help='For cycles that do not separate the surface.')
    p.add_argument('--loops', type=int, default=0)
    p.add_argument('--parallels', type=int, default=0)

    p = sub.add_parser('appendix',
                       help='Island counts on a line (B) or circle (D).')
    p.add_argument('which', choices=['B', 'D'])
    p.add_argument('n', type=int)
    p.add_argument('m', type=int)
    p.add_argument('--mode', default=None,
                   choices=sorted({m.value for m in BMode} |
                                  {m.value for m in DMode}),
                   help='Compute one way only. By default every mode runs '
                        'and they must agree.')

    p = sub.add_parser('tee', help='-omega * beta(-1).')
    p.add_argument('file', nargs='?', default=None,
                   help='A .smap document to compute beta(-1) of.')
    p.add_argument('--omega', required=True,
                   help="A rational such as '1' or '3/2'.")
    p.add_argument('--value', type=int, default=None,
                   help='beta(-1) itself, instead of a document.')

    return parser.parse_args(argv)


def main(args: Namespace) -> int:
    log = logging.getLogger(__name__)
    try:
        # Configure the logger. A bad config file already fails here
        logger_conf.configure(args.log_level)

        if args.threads is not None:
            settings.override(ENUMERATION_THREADS=args.threads)
        if args.force:
            log.warning('Ignoring the enumeration vertex limit '
                        f'({settings.ENUMERATION_VERTEX_LIMIT})')

        log.debug(f"Running '{args.command}'")
        return COMMANDS[args.command](args)
    except Exception as e:
        return handle_err(e, f"Command '{args.command}' failed")


if __name__ == '__main__':
    sys.exit(main(parse_args()))
