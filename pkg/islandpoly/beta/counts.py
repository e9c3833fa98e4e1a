from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from ..poly import IntPoly


@dataclass(frozen=True)
class CountVector:
    """
    Island boundary counts D_1..D_n (or the colored counts, one per number
    of colors). Partial vectors from different subset ranges add up
    entrywise.
    """

    counts: tuple[int, ...]
    colored: bool = False

    @classmethod
    def zeros(cls, n: int, colored: bool = False) -> CountVector:
        return cls((0,) * n, colored)

    def __add__(self, other: CountVector) -> CountVector:
        if len(self.counts) != len(other.counts) or \
                self.colored != other.colored:
            raise ValueError("can't add count vectors of different shapes")
        return CountVector(tuple(a + b for a, b in
                                 zip(self.counts, other.counts)),
                           self.colored)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    @property
    def top(self) -> int:
        """D_n, the face count of the whole graph."""
        return self.counts[-1] if self.counts else 0

    def beta_total(self) -> IntPoly:
        return IntPoly(self.counts)

    def beta_bar(self) -> IntPoly:
        return IntPoly(self.counts[:-1])


class BetaPair(NamedTuple):
    beta_bar: IntPoly
    beta_total: IntPoly
