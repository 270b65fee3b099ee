"""Declarative fibration model: base, discriminant components, collision
points, Mordell-Weil rank, singular-point germs and the Euler-characteristic
source.  Evaluation lives in `engine`."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from ..geometry.base import BaseSurface, GeometryError
from ..geometry.kodaira import KodairaData
from ..liealg.cartan import Algebra
from ..localring.poly import Polynomial

Q1 = "Q1"
Q2 = "Q2"
CR = "Cr"
COLLISION_KINDS = (Q1, Q2, CR)


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class Component:
    """Discriminant component: divisor class plus declared vanishing orders."""

    divisor_class: Tuple[int, ...]
    kodaira: KodairaData
    genus_override: Optional[int] = None
    cover_genus_override: Optional[int] = None


@dataclass(frozen=True)
class KatzVafaContext:
    """Inputs of the branching method: restricted-surface algebra at Q, the
    algebra after base change, b = d/c, optional explicit projections."""

    g_q: Algebra
    g_qs: Algebra
    b: int = 1
    projection: Optional[Tuple[Tuple[int, ...], ...]] = None  # g_q -> g_qs
    target_projection: Optional[Tuple[Tuple[int, ...], ...]] = None  # g_qs -> gauge
    branch_point: bool = False

    def __post_init__(self):
        if self.b < 1:
            raise ModelError("b = d/c must be a positive integer")


@dataclass(frozen=True)
class Collision:
    kind: str
    count: int
    fiber_euler: Optional[int] = None  # Euler number of the fiber of X at the point
    component: int = 0
    rep_override: Optional[Tuple[Tuple[object, str], ...]] = None  # ((mult, name), ...)
    rep_prefactor: Fraction = Fraction(1)
    katz_vafa: Optional[KatzVafaContext] = None

    def __post_init__(self):
        if self.kind not in COLLISION_KINDS:
            raise ModelError(f"unknown collision kind {self.kind!r}")
        if self.count < 0:
            raise ModelError("collision counts must be >= 0")


@dataclass(frozen=True)
class SingularPoint:
    count: int
    equation: Polynomial

    def __post_init__(self):
        if self.count < 0:
            raise ModelError("singular point counts must be >= 0")


@dataclass(frozen=True)
class ChiSpec:
    """Exactly one of the four sources must be populated.

    direct:       chi_top given outright
    betti:        chi = 2(1 + b2) - b3
    deformations: chi = 2(KaDef - CxDef) + sum of Milnor numbers
    strata:       chi = sum over strata of chi(stratum) * chi(fiber)
                  plus point-fiber contributions; collision points are
                  included automatically when include_collisions is set
    An optional `expect` value cross-checks the computed chi.
    """

    source: str
    value: Optional[int] = None
    b2: Optional[int] = None
    b3: Optional[int] = None
    kadef: Optional[int] = None
    cxdef: Optional[int] = None
    strata: Tuple[Tuple[int, int], ...] = ()  # (chi of stratum, fiber euler)
    points: Tuple[Tuple[int, int], ...] = ()  # (count, fiber euler)
    include_collisions: bool = True
    expect: Optional[int] = None

    def __post_init__(self):
        if self.source not in ("direct", "betti", "deformations", "strata"):
            raise ModelError(f"unknown chi source {self.source!r}")
        needed = {
            "direct": ("value",),
            "betti": ("b2", "b3"),
            "deformations": ("kadef", "cxdef"),
            "strata": (),
        }[self.source]
        for name in needed:
            if getattr(self, name) is None:
                raise ModelError(f"chi source {self.source!r} requires {name}")


@dataclass(frozen=True)
class ModelOptions:
    generic: bool = True
    abelian_vectors: bool = True  # u(1) factors contribute rank to V
    variant: str = "auto"  # "auto" | "R" | "Rprime"

    def __post_init__(self):
        if self.variant not in ("auto", "R", "Rprime"):
            raise ModelError(f"unknown variant {self.variant!r}")


@dataclass(frozen=True)
class BudgetSpec:
    r1: int
    r2: int


@dataclass(frozen=True)
class FibrationModel:
    base: BaseSurface
    components: Tuple[Component, ...] = ()
    collisions: Tuple[Collision, ...] = ()
    mw_rank: int = 0
    singular_points: Tuple[SingularPoint, ...] = ()
    chi: Optional[ChiSpec] = None
    budget: Optional[BudgetSpec] = None
    options: ModelOptions = field(default_factory=ModelOptions)

    def __post_init__(self):
        if self.mw_rank < 0:
            raise ModelError("Mordell-Weil rank must be >= 0")
        if self.chi is None:
            raise ModelError("a chi source is required")
        for coll in self.collisions:
            if self.components and not (0 <= coll.component < len(self.components)):
                raise ModelError("collision references a missing component")
            if coll.kind != CR and not self.components:
                raise ModelError("Q1/Q2 collisions need a discriminant component")

    def with_(self, **kwargs) -> "FibrationModel":
        return replace(self, **kwargs)
