from .bitset import VertexSubset
from .multigraph import (Edge, Island, IslandDecomposition, Multigraph,
                         induced, islands)
from .rotation_map import (FaceStructure, RotationMap, TraceResult,
                           complement_components, dart_name, dart_of, twin,
                           validate_and_trace)
from .embedded import EmbeddedGraph, Mode, face_count
from .union_find import UnionFind
