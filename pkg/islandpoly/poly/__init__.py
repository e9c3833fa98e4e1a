from .intpoly import (IntPoly, poly_sum, shifted_basis_decompose,
                      shifted_basis_recompose)
