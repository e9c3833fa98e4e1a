from .coloring import Coloring
from .counts import BetaPair, CountVector
from .engine import (FaceCounter, beta, beta_colored, beta_total,
                     check_size, colored_counts, face_table, island_counts)
