from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
import logging

from ..closedforms.formulas import tree_poly
from ..poly import IntPoly, shifted_basis_decompose

_log = logging.getLogger(__name__)


class Classification(Enum):
    TREE = 'tree'
    DECORATED_TREE = 'decorated-tree'
    CYCLE = 'cycle'
    NONE = 'none'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DetectResult:
    """
    What a polynomial looks like. This is a match on the polynomial alone;
    `hypotheses` lists what the graph must satisfy for the match to say
    anything about it, and the caller decides whether it does.
    """

    classification: Classification
    theorem: str | None = None
    hypotheses: tuple[str, ...] = ()
    a: int | None = None
    b: int | None = None
    c: int | None = None
    loops: int | None = None
    parallels: int | None = None
    coefficients: tuple[int, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        out: dict = {'classification': str(self.classification),
                     'theorem': self.theorem,
                     'hypotheses': list(self.hypotheses)}
        for key in ('a', 'b', 'c', 'loops', 'parallels'):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


def detect(p: IntPoly, n: int) -> DetectResult:
    """
    Classify a total island boundary polynomial of a graph on n vertices.
    In order: the tree polynomial; a(1+x)^(n-1) + b(1+x)^(n-2) with n >= 3,
    read as a tree with a+b-n loops and n-b-1 similar adjacencies when both
    are nonnegative; n(1+x)^(n-2) + c x^(n-1) with c in {1, 2}, a cycle.

    Args:
        p: The polynomial, of degree at most n - 1.
        n: The vertex count.

    Returns:
        DetectResult: The classification.
    """

    if n < 1 or (p.degree is not None and p.degree > n - 1):
        return DetectResult(Classification.NONE)

    if p == tree_poly(n):
        return DetectResult(Classification.TREE, 'tree criterion',
                            ('planar',),
                            coefficients=shifted_basis_decompose(p, n))

    if n >= 3:
        coefficients = shifted_basis_decompose(p, n)
        a, b = coefficients[n - 1], coefficients[n - 2]
        if not any(coefficients[:n - 2]):
            loops, parallels = a + b - n, n - b - 1
            if loops >= 0 and parallels >= 0:
                return DetectResult(
                    Classification.DECORATED_TREE,
                    'decorated tree criterion',
                    ('planar', 'connected', 'tree with self-loops and '
                                            'similar adjacencies'),
                    a=a, b=b, loops=loops, parallels=parallels,
                    coefficients=coefficients
                )

        rest = p - n * IntPoly.one_plus_x(n - 2)
        c = rest[n - 1]
        if c in (1, 2) and rest == IntPoly.monomial(c, n - 1):
            return DetectResult(
                Classification.CYCLE, 'cycle criterion',
                ('connected', 'separating' if c == 2 else 'non-separating'),
                c=c, coefficients=coefficients
            )

    _log.debug(f'No classification for {p} on {n} vertices')
    return DetectResult(Classification.NONE)
