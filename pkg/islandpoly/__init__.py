"""
Exact island boundary polynomials of graphs embedded in oriented surfaces.
"""

from .beta import Coloring, beta, beta_colored, island_counts
from .graphs import EmbeddedGraph, Mode, Multigraph, RotationMap
from .poly import IntPoly
