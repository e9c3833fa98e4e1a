from .detect import Classification, DetectResult, detect
from .euler import EulerEmergence, euler_emergence
from .identities import IdentityInstance, IdentityKind, check_identity
from .pants import PantsGraphs, pants_diff, pants_graphs, s_counts
from .tee import tee, total_island_count
from .xi import xi_poly
