from .model import (
    CR,
    COLLISION_KINDS,
    BudgetSpec,
    ChiSpec,
    Collision,
    Component,
    FibrationModel,
    KatzVafaContext,
    ModelError,
    ModelOptions,
    Q1,
    Q2,
    SingularPoint,
)
from .engine import (
    AnomalyLedger,
    ComponentSummary,
    DeformationCounts,
    GaugeAlgebra,
    RepLine,
    SpectrumReport,
    TheoremCheck,
    anomaly_check,
    assemble_algebra,
    check_theorem,
    deformation_counts,
    euler_characteristic,
    evaluate,
    localized_spectrum,
    r_invariant,
    r_prime_invariant,
    r_rhs,
    representation_table,
    singularity_summary,
    summarize_components,
    unlocalized_spectrum,
)
from .intersections import IntersectionError, LocalizedRep, localized_rep_from_intersections
from .katzvafa import KVResult, katz_vafa
from .table_small import SMALL_ROWS, point_fiber_euler

__all__ = [
    "CR",
    "COLLISION_KINDS",
    "BudgetSpec",
    "ChiSpec",
    "Collision",
    "Component",
    "FibrationModel",
    "KatzVafaContext",
    "ModelError",
    "ModelOptions",
    "Q1",
    "Q2",
    "SingularPoint",
    "AnomalyLedger",
    "ComponentSummary",
    "DeformationCounts",
    "GaugeAlgebra",
    "RepLine",
    "SpectrumReport",
    "TheoremCheck",
    "anomaly_check",
    "assemble_algebra",
    "check_theorem",
    "deformation_counts",
    "euler_characteristic",
    "evaluate",
    "localized_spectrum",
    "r_invariant",
    "r_prime_invariant",
    "r_rhs",
    "representation_table",
    "singularity_summary",
    "summarize_components",
    "unlocalized_spectrum",
    "IntersectionError",
    "LocalizedRep",
    "localized_rep_from_intersections",
    "KVResult",
    "katz_vafa",
    "SMALL_ROWS",
    "point_fiber_euler",
]
