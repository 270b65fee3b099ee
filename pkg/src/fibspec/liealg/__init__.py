from .cartan import (
    Algebra,
    LieAlgebraError,
    algebra_from_label,
    cartan_matrix,
    highest_root,
    physics_algebra,
    positive_roots,
    simple_algebra,
)
from .weights import (
    DEFAULT_WEIGHT_CAP,
    bilinear,
    dominant_conjugate,
    is_dominant,
    reflect,
    weight_system,
    weyl_dim,
    weyl_orbit,
    zero_weight_multiplicity,
)
from .reps import Rep, composite_rep, identify_rep, named_rep
from .branching import (
    BranchingError,
    apply_projection,
    branch,
    conjugate_highest_weight,
    decompose_multiset,
    push_multiset,
    registry_projection,
)
from .table_a import NM, NO_MATTER, ROW_BY_NUMBER, ROWS, TableRow, row_for_fiber, row_selector

__all__ = [
    "Algebra",
    "LieAlgebraError",
    "algebra_from_label",
    "cartan_matrix",
    "highest_root",
    "physics_algebra",
    "positive_roots",
    "simple_algebra",
    "DEFAULT_WEIGHT_CAP",
    "bilinear",
    "dominant_conjugate",
    "is_dominant",
    "reflect",
    "weight_system",
    "weyl_dim",
    "weyl_orbit",
    "zero_weight_multiplicity",
    "Rep",
    "composite_rep",
    "identify_rep",
    "named_rep",
    "BranchingError",
    "apply_projection",
    "branch",
    "conjugate_highest_weight",
    "decompose_multiset",
    "push_multiset",
    "registry_projection",
    "NM",
    "NO_MATTER",
    "ROW_BY_NUMBER",
    "ROWS",
    "TableRow",
    "row_for_fiber",
    "row_selector",
]
