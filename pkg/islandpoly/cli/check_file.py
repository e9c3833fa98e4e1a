"""
Identity check files. One directive per line, '#' comments:

    kind <identity-kind>
    at <v> [<w> ...]        attach vertices or endpoints
    on-edge <edge-id>
    merge <color> <color>   the two colors of a color-merge
    splice <pos> <pos>      splice positions for a new edge, surface mode
    graph                   starts an embedded .smap document, one per
    ...                     operand, in order
    end
"""

from __future__ import annotations

import logging

from .smap import parse_smap
from ..analysis.identities import IdentityInstance, IdentityKind
from ..transforms.edits import InsertionSpec
from ..utils import ParseError

_log = logging.getLogger(__name__)

_COLORED = frozenset({IdentityKind.COLOR_MERGE,
                      IdentityKind.COLORED_DISJOINT,
                      IdentityKind.COLORED_APPENDIX,
                      IdentityKind.COLORED_BRIDGE})


def _integers(words: list[str], line: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(w) for w in words)
    except ValueError:
        raise ParseError(attr=what, msg=f'{what} must be integers',
                         line=line)
    if any(v < 0 for v in values):
        raise ParseError(attr=what, msg=f'{what} must be nonnegative',
                         line=line)
    return values


def parse_check_file(text: str) -> IdentityInstance:
    """
    Read an identity check file.

    Args:
        text: The file contents.

    Returns:
        IdentityInstance: The identity and its operands.

    Raises:
        ParseError: If the file or one of its graph documents is invalid.
    """

    kind = None
    vertices: tuple[int, ...] = ()
    edge = None
    colors: tuple[str, ...] = ()
    insertion = None
    graphs = []
    colorings = []

    lines = text.splitlines()
    i = 0
    while i < len(lines):
        number = i + 1
        words = lines[i].split('#', 1)[0].split()
        i += 1
        if not words:
            continue
        head, args = words[0], words[1:]

        match head:
            case 'kind':
                if len(args) != 1:
                    raise ParseError(attr='kind',
                                     msg="expected 'kind <identity-kind>'",
                                     line=number)
                try:
                    kind = IdentityKind(args[0])
                except ValueError:
                    known = ', '.join(k.value for k in IdentityKind)
                    raise ParseError(attr='kind',
                                     msg=f"unknown identity '{args[0]}'; "
                                         f'known kinds are {known}',
                                     line=number, column=6)
            case 'at':
                vertices = _integers(args, number, 'vertices')
            case 'on-edge':
                if len(args) != 1:
                    raise ParseError(attr='on-edge',
                                     msg="expected 'on-edge <edge-id>'",
                                     line=number)
                edge = _integers(args, number, 'edge ids')[0]
            case 'merge':
                if len(args) != 2:
                    raise ParseError(attr='merge',
                                     msg="expected 'merge <color> <color>'",
                                     line=number)
                colors = tuple(args)
            case 'splice':
                if len(args) != 2:
                    raise ParseError(attr='splice',
                                     msg="expected 'splice <pos> <pos>'",
                                     line=number)
                insertion = InsertionSpec(*_integers(args, number,
                                                     'positions'))
            case 'graph':
                start = i
                while i < len(lines) and \
                        lines[i].split('#', 1)[0].strip() != 'end':
                    i += 1
                if i == len(lines):
                    raise ParseError(attr='graph',
                                     msg="graph block has no 'end'",
                                     line=number)
                eg, col = parse_smap('\n'.join(lines[start:i]),
                                     first_line=start + 1)
                graphs.append(eg)
                colorings.append(col)
                i += 1
            case _:
                raise ParseError(attr=head,
                                 msg=f"unknown directive '{head}'",
                                 line=number)

    if kind is None:
        raise ParseError(attr='kind', msg="missing 'kind' directive",
                         line=max(len(lines), 1))

    if kind in _COLORED:
        if any(c is None for c in colorings):
            raise ParseError(attr='graph',
                             msg=f'every graph of a {kind} check needs '
                                 'color directives',
                             line=max(len(lines), 1))
    else:
        colorings = []

    _log.debug(f'Read a {kind} check with {len(graphs)} graph(s)')
    return IdentityInstance(kind, tuple(graphs), tuple(colorings), vertices,
                            edge, colors, insertion)
