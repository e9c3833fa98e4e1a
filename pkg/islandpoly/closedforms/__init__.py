from .appendix import (BMode, B_line, B_line_telescoped, DMode, D_circle,
                       LineSubset, islands_on_circle, islands_on_line)
from .formulas import (ClosedKind, appendix_poly, closed_beta, cycle_poly,
                       decorated_tree_poly, discrete_poly, tree_poly)
