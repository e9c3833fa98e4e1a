from .edits import (InsertionSpec, Relabeling, add_appendix, add_edge,
                    add_parallel_edge, add_self_loop, contract,
                    contraction_relabeling, delete_edge, delete_vertices,
                    short_circuit, subdivide)
from .combine import Combination, CombineKind, combine
from .recolor import merge_colors, permute_colors
from .script import (AdmissibleOp, ScriptOp, apply_op, parse_script,
                     run_script, tree_cycle_generator)
