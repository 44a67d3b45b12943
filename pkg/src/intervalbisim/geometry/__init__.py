from .hull import HullFamily, extreme_points, hull_equal, member_of_hull
from .lp import Constraint, LPResult, feasible_point, in_convex_hull, solve
from .minimal import (
    containing_mixture,
    minimal_polytopes,
    minimal_signature,
    mixture_contained,
    remaining_polytopes,
    state_polytopes,
    strictly_minimal,
)
from .polytope import (
    ClassDistribution,
    ClassPolytope,
    WeightVector,
    canonical_key,
    class_polytope,
    combination_count,
    combination_point,
    corner_combinations,
    distinct,
    vertices,
    weight_grid,
)

__all__ = [
    "ClassDistribution",
    "ClassPolytope",
    "Constraint",
    "HullFamily",
    "LPResult",
    "WeightVector",
    "canonical_key",
    "class_polytope",
    "combination_count",
    "combination_point",
    "containing_mixture",
    "corner_combinations",
    "distinct",
    "extreme_points",
    "feasible_point",
    "hull_equal",
    "in_convex_hull",
    "member_of_hull",
    "minimal_polytopes",
    "minimal_signature",
    "mixture_contained",
    "remaining_polytopes",
    "solve",
    "state_polytopes",
    "strictly_minimal",
    "vertices",
    "weight_grid",
]
