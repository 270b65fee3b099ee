from .base import (
    BaseSurface,
    DivisorClass,
    GeometryError,
    add,
    cover_genus,
    curve_genus,
    hirzebruch,
    intersect,
    make_base,
    named_base,
    projective_plane,
    scale,
)
from .kodaira import (
    BudgetCheck,
    FiberAssignment,
    KodairaData,
    MONODROMY_TAGS,
    NonMinimalError,
    classify_fiber,
    collision_budget,
    residual_discriminant,
)

__all__ = [
    "BaseSurface",
    "DivisorClass",
    "GeometryError",
    "add",
    "cover_genus",
    "curve_genus",
    "hirzebruch",
    "intersect",
    "make_base",
    "named_base",
    "projective_plane",
    "scale",
    "BudgetCheck",
    "FiberAssignment",
    "KodairaData",
    "MONODROMY_TAGS",
    "NonMinimalError",
    "classify_fiber",
    "collision_budget",
    "residual_discriminant",
]
