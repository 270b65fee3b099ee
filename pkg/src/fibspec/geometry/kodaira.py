"""Kodaira-Tate fiber classification from vanishing orders, the residual
discriminant class, and the collision budget check.

Monodromy (split / semi-split / non-split) is declared input: the table of
vanishing orders determines the fiber type, and the tag then selects the
algebra among the rows admitting that type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from ..liealg.cartan import Algebra
from ..liealg.table_a import TableRow, row_for_fiber
from .base import BaseSurface, GeometryError, add, intersect, scale

MONODROMY_TAGS = ("split", "semi-split", "non-split", "not-applicable")

# Euler numbers of the smooth Kodaira fibers.
_FIBER_EULER = {
    "In": lambda n: n,
    "II": lambda n: 2,
    "III": lambda n: 3,
    "IV": lambda n: 4,
    "In*": lambda n: n + 6,
    "IV*": lambda n: 8,
    "III*": lambda n: 9,
    "II*": lambda n: 10,
}


class NonMinimalError(GeometryError):
    """Vanishing orders (>=4, >=6, >=12): excluded from minimal models."""


@dataclass(frozen=True)
class KodairaData:
    ord_a: int
    ord_b: int
    ord_d: int
    monodromy: str = "not-applicable"

    def __post_init__(self):
        if min(self.ord_a, self.ord_b, self.ord_d) < 0:
            raise GeometryError("vanishing orders must be natural numbers")
        if self.monodromy not in MONODROMY_TAGS:
            raise GeometryError(f"unknown monodromy tag {self.monodromy!r}")


@dataclass(frozen=True)
class FiberAssignment:
    kodaira_type: str  # display form, e.g. "I_5", "I_0*", "IV"
    algebra: Optional[Algebra]
    row: TableRow
    param: Optional[int]
    fiber_euler: int
    lam: int  # multiplicity of the discriminant along the component


def _type_from_orders(a: int, b: int, d: int) -> Tuple[str, Optional[int]]:
    if a >= 4 and b >= 6 and d >= 12:
        raise NonMinimalError(
            f"orders ({a},{b},{d}) are non-minimal; no non-minimal points allowed"
        )
    if d == 0:
        return ("I0", 0)
    if a == 0 and b == 0:
        return ("In", d)
    if a >= 1 and b == 1 and d == 2:
        return ("II", None)
    if a == 1 and b >= 2 and d == 3:
        return ("III", None)
    if a >= 2 and b == 2 and d == 4:
        return ("IV", None)
    if a >= 2 and b >= 3 and d == 6:
        return ("In*", 0)
    if a == 2 and b == 3 and d >= 7:
        return ("In*", d - 6)
    if a >= 3 and b == 4 and d == 8:
        return ("IV*", None)
    if a == 3 and b >= 5 and d == 9:
        return ("III*", None)
    if a >= 4 and b == 5 and d == 10:
        return ("II*", None)
    raise GeometryError(f"vanishing orders ({a},{b},{d}) match no Kodaira type")


def classify_fiber(data: KodairaData) -> FiberAssignment:
    """Kodaira type from the vanishing orders, algebra from type plus the
    declared monodromy tag, per the 23-row table."""
    kod, n_value = _type_from_orders(data.ord_a, data.ord_b, data.ord_d)
    if kod == "I0":
        raise GeometryError("component with ord(Delta) = 0 is not a discriminant component")
    try:
        row, param = row_for_fiber(kod, n_value, data.monodromy)
    except Exception as exc:
        raise GeometryError(str(exc)) from exc
    if row.algebra_label != "-" and data.monodromy not in row.monodromy:
        raise GeometryError(
            f"monodromy tag {data.monodromy!r} is incompatible with row {row.number}"
        )
    if row.algebra_label == "-" and data.monodromy != "not-applicable":
        raise GeometryError(
            f"monodromy tag {data.monodromy!r} is incompatible with type {kod}"
        )
    euler = _FIBER_EULER[kod](n_value)
    label = row.kodaira_label(param) if row.param else row.kodaira_label()
    if kod in ("In", "In*"):
        label = f"I_{n_value}{'*' if kod == 'In*' else ''}"
    return FiberAssignment(label, row.algebra(param), row, param, euler, data.ord_d)


def residual_discriminant(base: BaseSurface, sigma1, lam: int) -> Tuple[int, ...]:
    """Residual class Sigma0 = -12 K_B - lam * Sigma1."""
    return add(scale(-12, base.canonical), scale(-lam, sigma1))


@dataclass(frozen=True)
class BudgetCheck:
    budget: int
    assigned: int
    r1: int
    r2: int
    b1_count: int
    b2_count: int

    @property
    def passed(self) -> bool:
        return self.budget == self.assigned


def collision_budget(
    base: BaseSurface,
    sigma1,
    lam: int,
    r1: int,
    r2: int,
    b1_count: int,
    b2_count: int,
) -> BudgetCheck:
    """Check Sigma0.Sigma1 = r1*B1 + r2*B2 for declared local multiplicities."""
    if r1 < 1 or r2 < 1:
        raise GeometryError("local intersection multiplicities must be >= 1")
    if b1_count < 0 or b2_count < 0:
        raise GeometryError("collision counts must be >= 0")
    budget = intersect(base, residual_discriminant(base, sigma1, lam), sigma1)
    if budget < 0:
        raise GeometryError(f"negative collision budget {budget}: inconsistent input")
    return BudgetCheck(budget, r1 * b1_count + r2 * b2_count, r1, r2, b1_count, b2_count)
