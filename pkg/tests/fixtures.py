"""Model builders for the three singular collision patterns.

Every fixture carries a strata table whose free entry (the open part of the
residual locus) is pinned by the deconstruction identity; the distinguished
component's stratum, the collision-point fibers and the cusp points of the
residual curve are honest bookkeeping.  The frozen numbers for the plane
fixtures were derived by hand and are asserted in the tests.
"""

from fibspec.geometry import intersect, named_base, scale, add, curve_genus, cover_genus
from fibspec.geometry.kodaira import KodairaData, residual_discriminant
from fibspec.localring import parse_polynomial
from fibspec.spectra import (
    BudgetSpec,
    ChiSpec,
    Collision,
    Component,
    FibrationModel,
    SingularPoint,
)

CONIFOLD = parse_polynomial("z^2+x^2+y^2+w^2", ("z", "x", "y", "w"))
A2_GERM = parse_polynomial("z^3+x^2+y^2+w^2", ("z", "x", "y", "w"))


def _minus_2k_dot(base, sigma):
    return intersect(base, scale(-2, base.canonical), sigma)


def case1_model(base, sigma1, chi_shift: int = 0) -> FibrationModel:
    """Distinguished I_1 component; nodes of the residual locus against it
    carry conifold points (trivial algebra, R = sum tau)."""
    lam = 1
    b1 = _minus_2k_dot(base, sigma1)  # type-II touch points
    budget = intersect(base, residual_discriminant(base, sigma1, lam), sigma1)
    b2 = budget - 3 * b1
    assert b2 >= 0
    g = curve_genus(base, sigma1)
    rhs = b2  # sum of Tyurina numbers; trivial algebra contributes nothing
    mu_sum = b2
    chi_target = 2 * (rhs - 30 * base.k_squared()) - mu_sum + 2 * chi_shift
    sigma1_open = 2 - 2 * g - b1 - b2
    cusps = 24 * base.k_squared() - 2 * b1
    # collisions contribute b1*2 + b2*1 automatically
    residual_open = chi_target - sigma1_open * 1 - 2 * cusps - (2 * b1 + b2)
    return FibrationModel(
        base=base,
        components=(Component(sigma1, KodairaData(0, 0, 1, "not-applicable")),),
        collisions=(
            Collision("Q1", b1, fiber_euler=2),
            Collision("Q2", b2, fiber_euler=1),
        ),
        singular_points=(SingularPoint(b2, CONIFOLD),),
        chi=ChiSpec(
            source="strata",
            strata=((sigma1_open, 1), (residual_open, 1)),
            points=((cusps, 2),),
            expect=chi_target if chi_shift == 0 else None,
        ),
        budget=BudgetSpec(3, 1),
    )


def case2_model(base, sigma1) -> FibrationModel:
    """Distinguished type-II component; touch points of the residual locus
    carry Kleinian points with tau = 2."""
    lam = 2
    budget = intersect(base, residual_discriminant(base, sigma1, lam), sigma1)
    assert budget % 2 == 0
    b1 = budget // 2  # contact order 2 at each collision
    g = curve_genus(base, sigma1)
    rhs = 2 * b1
    mu_sum = 2 * b1
    chi_target = 2 * (rhs - 30 * base.k_squared()) - mu_sum
    sigma1_open = 2 - 2 * g - b1
    # residual cusp points: common zeros of the two reduced coefficients
    a_cls = add(scale(-4, base.canonical), scale(-1, sigma1))
    b_cls = add(scale(-6, base.canonical), scale(-1, sigma1))
    cusps = intersect(base, a_cls, b_cls)
    residual_open = chi_target - sigma1_open * 2 - 2 * cusps - 2 * b1
    return FibrationModel(
        base=base,
        components=(Component(sigma1, KodairaData(1, 1, 2, "not-applicable")),),
        collisions=(Collision("Q1", b1, fiber_euler=2),),
        singular_points=(SingularPoint(b1, A2_GERM),),
        chi=ChiSpec(
            source="strata",
            strata=((sigma1_open, 2), (residual_open, 1)),
            points=((cusps, 2),),
            expect=chi_target,
        ),
        budget=BudgetSpec(2, 1),
    )


def case3_model(base, sigma1, k: int) -> FibrationModel:
    """Distinguished I_{2k+1} non-split component (algebra sp(k)); the
    transverse residual points carry conifolds and the fund representation."""
    lam = 2 * k + 1
    b1 = _minus_2k_dot(base, sigma1)
    budget = intersect(base, residual_discriminant(base, sigma1, lam), sigma1)
    b2 = budget - 3 * b1
    assert b2 >= 0
    g = curve_genus(base, sigma1)
    gp = cover_genus(base, sigma1, genus=g)
    rhs = (
        (g - 1) * 2 * k * k
        + (gp - g) * (2 * k * k + 2 * k)
        + b1 * k
        + b2 * 2 * k
        + b2
    )
    mu_sum = b2
    chi_target = 2 * (rhs - 30 * base.k_squared()) - mu_sum
    fiber = 2 * k + 1
    sigma1_open = 2 - 2 * g - b1 - b2
    cusps = 24 * base.k_squared() - 6 * b1
    residual_open = (
        chi_target
        - sigma1_open * fiber
        - 2 * cusps
        - (b1 * (k + 2) + b2 * (2 * k + 1))
    )
    return FibrationModel(
        base=base,
        components=(Component(sigma1, KodairaData(0, 0, lam, "non-split")),),
        collisions=(
            Collision("Q1", b1, fiber_euler=k + 2),
            Collision("Q2", b2, fiber_euler=2 * k + 1),
        ),
        singular_points=(SingularPoint(b2, CONIFOLD),),
        chi=ChiSpec(
            source="strata",
            strata=((sigma1_open, fiber), (residual_open, 1)),
            points=((cusps, 2),),
            expect=chi_target,
        ),
        budget=BudgetSpec(3, 1),
    )


def smooth_weierstrass_p2(source: str = "betti") -> FibrationModel:
    """Generic smooth model over the plane; chi = -540 every way."""
    base = named_base("P2")
    if source == "betti":
        chi = ChiSpec(source="betti", b2=2, b3=546)
    elif source == "deformations":
        chi = ChiSpec(source="deformations", kadef=2, cxdef=272)
    elif source == "direct":
        chi = ChiSpec(source="direct", value=-540)
    else:  # strata: irreducible discriminant with 216 cusp points
        chi = ChiSpec(
            source="strata",
            strata=((-972, 1),),
            points=((216, 2),),
            expect=-540,
        )
    return FibrationModel(base=base, chi=chi)
