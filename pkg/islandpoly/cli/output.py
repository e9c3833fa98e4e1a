"""Text and JSON rendering of command results."""

from __future__ import annotations

import json
from typing import Any

from ..beta.counts import CountVector
from ..graphs.embedded import EmbeddedGraph
from ..poly import IntPoly


def summary(eg: EmbeddedGraph, counts: CountVector) -> dict[str, Any]:
    """
    The stable summary schema shared by the graph commands: counts,
    beta_bar, beta_total, beta_at_minus1, faces and genus.
    """

    total = counts.beta_total()
    return {
        'counts': list(counts.counts),
        'beta_bar': counts.beta_bar().to_json(),
        'beta_total': total.to_json(),
        'beta_at_minus1': total(-1),
        'faces': counts.top,
        'genus': eg.genus,
    }


def summary_text(data: dict[str, Any]) -> str:
    counts = ', '.join(str(c) for c in data['counts'])
    return '\n'.join([
        f"counts:      {counts}",
        f"beta_bar:    {IntPoly(tuple(data['beta_bar']))}",
        f"beta_total:  {IntPoly(tuple(data['beta_total']))}",
        f"beta(-1):    {data['beta_at_minus1']}",
        f"faces:       {data['faces']}",
        f"genus:       {data['genus']}",
    ])


def to_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True)
