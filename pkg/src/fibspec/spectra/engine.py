"""Model evaluation: gauge algebra, representation content, deformation
counts, the R-invariant identity and the gravitational anomaly ledger.

Evaluation is pure: a model value goes in, a SpectrumReport value comes
out; independent models may be evaluated concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from ..geometry.base import cover_genus, curve_genus, intersect
from ..geometry.kodaira import (
    FiberAssignment,
    classify_fiber,
    collision_budget,
    residual_discriminant,
)
from ..liealg.cartan import Algebra
from ..liealg.reps import Rep, composite_rep, named_rep
from ..liealg.table_a import NM, NO_MATTER
from ..localring.invariants import milnor_number, tyurina_number
from ..localring.poly import Polynomial
from ..localring.standard import INFINITE
from .katzvafa import katz_vafa
from .model import (
    CR,
    Collision,
    FibrationModel,
    ModelError,
    Q1,
    Q2,
    SingularPoint,
)
from .table_small import point_fiber_euler


@dataclass(frozen=True)
class ComponentSummary:
    index: int
    assignment: FiberAssignment
    genus: int
    cover_genus: int

    @property
    def algebra(self) -> Optional[Algebra]:
        return self.assignment.algebra


@dataclass(frozen=True)
class GaugeAlgebra:
    summands: Tuple[Algebra, ...]
    u1_rank: int
    abelian_vectors: bool

    @property
    def dim(self) -> int:
        nonabelian = sum(a.dim for a in self.summands)
        return nonabelian + (self.u1_rank if self.abelian_vectors else 0)

    @property
    def rank(self) -> int:
        return sum(a.rank for a in self.summands) + self.u1_rank

    def label(self) -> str:
        parts = [a.physics for a in self.summands]
        if self.u1_rank:
            parts.append(f"u(1)^{self.u1_rank}" if self.u1_rank > 1 else "u(1)")
        return " + ".join(parts) if parts else "trivial"


@dataclass(frozen=True)
class RepLine:
    """One row of the representation table."""

    source: str  # "adj" | "rho0" | "Q1" | "Q2" | "Cr"
    component: Optional[int]
    label: str
    multiplicity: Fraction  # count x prefactor
    charged_each: Fraction  # charged dimension per unit multiplicity
    charged_total: Fraction


@dataclass(frozen=True)
class DeformationCounts:
    cx_def: int
    ka_def: int
    b2: int
    b3: int
    h11_x: int
    cx_def_localized: int
    cx_def_nonlocalized: int


@dataclass(frozen=True)
class TheoremCheck:
    mode: str  # "R" | "Rprime"
    lhs: int
    rhs: int
    lhs_prime: int
    rhs_prime: int

    @property
    def difference(self) -> int:
        if self.mode == "R":
            return self.rhs - self.lhs
        return self.rhs_prime - self.lhs_prime

    @property
    def passed(self) -> bool:
        return self.difference == 0


@dataclass(frozen=True)
class AnomalyLedger:
    hyper: Fraction
    vector: int
    tensor: int
    h_charged_unlocalized: Fraction
    h_charged_localized: Fraction
    h_uncharged: int
    h_uncharged_localized: int

    @property
    def residue(self) -> Fraction:
        return self.hyper - self.vector + 29 * self.tensor - 273

    @property
    def passed(self) -> bool:
        return self.residue == 0


@dataclass(frozen=True)
class SpectrumReport:
    model: FibrationModel
    components: Tuple[ComponentSummary, ...]
    algebra: GaugeAlgebra
    reps: Tuple[RepLine, ...]
    mu_sum: int
    tau_sum: int
    chi_top: int
    deformations: DeformationCounts
    theorem: TheoremCheck
    anomaly: AnomalyLedger
    budget_passed: Optional[bool]
    notes: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        ok = self.theorem.passed and self.anomaly.passed
        if self.budget_passed is not None:
            ok = ok and self.budget_passed
        return ok


# -- components and algebra ---------------------------------------------------


def summarize_components(model: FibrationModel) -> Tuple[ComponentSummary, ...]:
    if model.options.generic and len(model.components) > 1:
        raise ModelError(
            "genericity assumes a single distinguished component; "
            "disable the generic flag for multi-component models"
        )
    out = []
    for idx, comp in enumerate(model.components):
        assignment = classify_fiber(comp.kodaira)
        if assignment.lam != comp.kodaira.ord_d:
            raise ModelError("lambda must equal ord(Delta)")  # unreachable by construction
        if comp.genus_override is not None:
            g = comp.genus_override
        else:
            g = curve_genus(model.base, comp.divisor_class)
        if assignment.row.has_rho0():
            if comp.cover_genus_override is not None:
                gp = comp.cover_genus_override
            else:
                gp = cover_genus(model.base, comp.divisor_class, genus=g)
            if gp < g:
                raise ModelError("cover genus below base genus")
        else:
            gp = g
        out.append(ComponentSummary(idx, assignment, g, gp))
    return tuple(out)


def assemble_algebra(
    model: FibrationModel, comps: Optional[Sequence[ComponentSummary]] = None
) -> GaugeAlgebra:
    comps = summarize_components(model) if comps is None else comps
    summands = tuple(c.algebra for c in comps if c.algebra is not None)
    return GaugeAlgebra(summands, model.mw_rank, model.options.abelian_vectors)


# -- representation content ---------------------------------------------------


def unlocalized_spectrum(
    model: FibrationModel, comp: ComponentSummary
) -> List[Tuple[Rep, int]]:
    """adj with multiplicity g; non-simply-laced rows add (rho0, g' - g)."""
    if comp.algebra is None:
        return []
    out = [(named_rep(comp.algebra, "adj"), comp.genus)]
    row = comp.assignment.row
    if row.has_rho0():
        rho0 = row.resolve(row.rho0, comp.assignment.param)
        out.append((rho0, comp.cover_genus - comp.genus))
    return out


def _collision_rep(
    model: FibrationModel, coll: Collision, comp: Optional[ComponentSummary]
):
    """Rep carried by one point of the collision; None for no charged matter.

    Cr points carry a u(1)-charged singlet handled separately (charged
    dimension 1 per point, no nonabelian rep).
    """
    if coll.kind == CR:
        return None
    if comp is None or comp.algebra is None:
        if coll.rep_override is not None:
            raise ModelError("rep override on a trivial-algebra component")
        row = comp.assignment.row if comp else None
        if row is not None:
            cell = row.rho_q1 if coll.kind == Q1 else row.rho_q2
            if cell is None:
                raise ModelError(
                    f"row {row.number} admits no {coll.kind} collisions"
                )
        return None
    if coll.rep_override is not None:
        rep = composite_rep(comp.algebra, coll.rep_override)
        if coll.rep_prefactor != 1:
            rep = Rep(comp.algebra, rep.name, rep.parts, Fraction(coll.rep_prefactor))
        return rep
    if coll.katz_vafa is not None:
        return katz_vafa(coll.katz_vafa, comp.algebra).as_rep()
    row = comp.assignment.row
    cell = row.rho_q1 if coll.kind == Q1 else row.rho_q2
    if cell is None:
        raise ModelError(f"row {row.number} admits no {coll.kind} collisions")
    if cell == NM:
        raise ModelError(
            f"row {row.number} marks {coll.kind} as non-minimal (NM); "
            "the theory excludes such models"
        )
    if cell == NO_MATTER:
        return None
    return row.resolve(cell, comp.assignment.param)


def localized_spectrum(
    model: FibrationModel, comps: Optional[Sequence[ComponentSummary]] = None
) -> List[RepLine]:
    comps = summarize_components(model) if comps is None else comps
    lines: List[RepLine] = []
    for coll in model.collisions:
        if coll.kind == CR:
            lines.append(
                RepLine(
                    CR,
                    None,
                    "u(1) charged singlet",
                    Fraction(coll.count),
                    Fraction(1),
                    Fraction(coll.count),
                )
            )
            continue
        comp = comps[coll.component] if comps else None
        rep = _collision_rep(model, coll, comp)
        if rep is None:
            continue
        per_point = rep.charged_dim()
        lines.append(
            RepLine(
                coll.kind,
                coll.component,
                rep.label(),
                Fraction(coll.count) * rep.prefactor,
                per_point / rep.prefactor if rep.prefactor else Fraction(0),
                Fraction(coll.count) * per_point,
            )
        )
    return lines


def representation_table(
    model: FibrationModel, comps: Sequence[ComponentSummary]
) -> Tuple[RepLine, ...]:
    lines: List[RepLine] = []
    for comp in comps:
        for rep, mult in unlocalized_spectrum(model, comp):
            lines.append(
                RepLine(
                    "adj" if rep.name == "adj" else "rho0",
                    comp.index,
                    rep.label(),
                    Fraction(mult),
                    rep.charged_dim(),
                    mult * rep.charged_dim(),
                )
            )
    lines.extend(localized_spectrum(model, comps))
    return tuple(lines)


# -- singular points ----------------------------------------------------------


@lru_cache(maxsize=None)
def _germ_numbers(poly: Polynomial):
    return milnor_number(poly), tyurina_number(poly)


def singularity_summary(model: FibrationModel) -> Tuple[int, int]:
    """Count-weighted (sum of Milnor, sum of Tyurina) over singular points."""
    mu_total = 0
    tau_total = 0
    for point in model.singular_points:
        mu, tau = _germ_numbers(point.equation)
        if mu == INFINITE:
            raise ModelError(
                f"non-isolated singularity {point.equation}: Milnor number is infinite"
            )
        mu_total += point.count * mu
        tau_total += point.count * tau
    return mu_total, tau_total


# -- Euler characteristic -----------------------------------------------------


def _collision_fiber_euler(coll: Collision, comp: Optional[ComponentSummary]) -> int:
    if coll.fiber_euler is not None:
        return coll.fiber_euler
    if coll.kind == CR:
        return 2  # smooth I_2 point fiber
    if comp is not None:
        default = point_fiber_euler(
            comp.assignment.row.number, coll.kind, comp.assignment.param
        )
        if default is not None:
            return default
    raise ModelError(
        f"{coll.kind} collision needs an explicit fiber Euler number"
    )


def euler_characteristic(
    model: FibrationModel, comps: Optional[Sequence[ComponentSummary]] = None
) -> int:
    chi = model.chi
    comps = summarize_components(model) if comps is None else comps
    if chi.source == "direct":
        value = chi.value
    elif chi.source == "betti":
        value = 2 * (1 + chi.b2) - chi.b3
    elif chi.source == "deformations":
        mu_sum, _ = singularity_summary(model)
        value = 2 * (chi.kadef - chi.cxdef) + mu_sum
    else:  # strata
        value = 0
        for stratum_chi, fiber in chi.strata:
            value += stratum_chi * fiber
        for count, fiber in chi.points:
            value += count * fiber
        if chi.include_collisions:
            for coll in model.collisions:
                comp = comps[coll.component] if coll.kind != CR and comps else None
                value += coll.count * _collision_fiber_euler(coll, comp)
    if chi.expect is not None and chi.expect != value:
        raise ModelError(
            f"declared chi_top {chi.expect} disagrees with the computed value {value}"
        )
    return value


# -- deformation counts -------------------------------------------------------


def deformation_counts(
    model: FibrationModel,
    comps: Optional[Sequence[ComponentSummary]] = None,
    chi_value: Optional[int] = None,
    sums: Optional[Tuple[int, int]] = None,
) -> DeformationCounts:
    comps = summarize_components(model) if comps is None else comps
    mu_sum, tau_sum = singularity_summary(model) if sums is None else sums
    chi_value = euler_characteristic(model, comps) if chi_value is None else chi_value
    gauge = assemble_algebra(model, comps)
    h11_formula = 1 + model.base.h11 + gauge.rank

    chi = model.chi
    if chi.source == "betti":
        b2, b3 = chi.b2, chi.b3
        if model.options.generic and b2 != h11_formula:
            raise ModelError(
                f"declared b2 = {b2} conflicts with h11(X) = {h11_formula}"
            )
    elif chi.source == "deformations":
        b2 = chi.kadef
        b3 = 2 * (chi.cxdef + 1) - mu_sum
        if model.options.generic and b2 != h11_formula:
            raise ModelError(
                f"declared KaDef = {b2} conflicts with h11(X) = {h11_formula}"
            )
    else:
        b2 = h11_formula
        b3 = 2 * (1 + b2) - chi_value

    if (b3 + mu_sum) % 2:
        raise ModelError(
            f"b3 + sum of Milnor numbers = {b3 + mu_sum} is odd; model data inconsistent"
        )
    cx_def = (b3 + mu_sum) // 2 - 1
    if chi.source == "deformations" and cx_def != chi.cxdef:
        raise ModelError("CxDef input fails the b3 consistency chain")
    ka_def = b2
    return DeformationCounts(
        cx_def,
        ka_def,
        b2,
        b3,
        h11_formula,
        tau_sum,
        cx_def - tau_sum,
    )


# -- the identity and the anomaly --------------------------------------------


def _exact_int(value: Fraction, what: str) -> int:
    if Fraction(value).denominator != 1:
        raise ModelError(f"{what} is not an integer: {value} (inconsistent model data)")
    return int(value)


def r_invariant(model: FibrationModel, chi_value=None, sums=None) -> int:
    """R = 30 K_B^2 + (chi_top + sum mu)/2; integrality is asserted."""
    mu_sum, _ = singularity_summary(model) if sums is None else sums
    chi_value = euler_characteristic(model) if chi_value is None else chi_value
    value = 30 * model.base.k_squared() + Fraction(chi_value + mu_sum, 2)
    return _exact_int(value, "R invariant")


def r_prime_invariant(model: FibrationModel, chi_value=None, sums=None) -> int:
    """R' = 30 K_B^2 + (chi_top - sum mu + 2 sum tau)/2."""
    mu_sum, tau_sum = singularity_summary(model) if sums is None else sums
    chi_value = euler_characteristic(model) if chi_value is None else chi_value
    value = 30 * model.base.k_squared() + Fraction(chi_value - mu_sum + 2 * tau_sum, 2)
    return _exact_int(value, "R' invariant")


def r_rhs(
    model: FibrationModel,
    comps: Optional[Sequence[ComponentSummary]] = None,
    sums: Optional[Tuple[int, int]] = None,
) -> Tuple[int, int]:
    """Right-hand sides (plain, with the C_r term of the multi-component
    variant): sum over components of (g-1)(dim adj)_ch + (g'-g)(dim rho0)_ch,
    plus collision charged dimensions, plus the Tyurina sum."""
    comps = summarize_components(model) if comps is None else comps
    _, tau_sum = singularity_summary(model) if sums is None else sums
    total = Fraction(0)
    for comp in comps:
        if comp.algebra is None:
            continue
        adj_ch = named_rep(comp.algebra, "adj").charged_dim()
        total += (comp.genus - 1) * adj_ch
        row = comp.assignment.row
        if row.has_rho0():
            rho0 = row.resolve(row.rho0, comp.assignment.param)
            total += (comp.cover_genus - comp.genus) * rho0.charged_dim()
    cr_total = 0
    for line in localized_spectrum(model, comps):
        if line.source == CR:
            cr_total += line.charged_total
        else:
            total += line.charged_total
    total += tau_sum
    plain = _exact_int(total, "theorem right-hand side")
    return plain, _exact_int(total + cr_total, "variant right-hand side")


def _variant_mode(model: FibrationModel, mu_sum: int, tau_sum: int, notes: List[str]) -> str:
    forced = model.options.variant
    needs_prime = (
        model.mw_rank > 0
        or any(c.kind == CR for c in model.collisions)
        or mu_sum != tau_sum
        or sum(1 for c in model.components) > 1
    )
    if forced == "Rprime":
        return "Rprime"
    if needs_prime:
        if forced == "R":
            notes.append(
                "requested plain-R mode but the model needs the R' variant; downgraded"
            )
        elif mu_sum != tau_sum:
            notes.append("sum mu != sum tau: downgraded to the R' variant")
        return "Rprime"
    return "R"


def check_theorem(
    model: FibrationModel,
    comps: Optional[Sequence[ComponentSummary]] = None,
    chi_value: Optional[int] = None,
    sums: Optional[Tuple[int, int]] = None,
    notes: Optional[List[str]] = None,
) -> TheoremCheck:
    comps = summarize_components(model) if comps is None else comps
    sums = singularity_summary(model) if sums is None else sums
    chi_value = euler_characteristic(model, comps) if chi_value is None else chi_value
    notes = [] if notes is None else notes
    mode = _variant_mode(model, sums[0], sums[1], notes)
    lhs = r_invariant(model, chi_value, sums)
    lhs_prime = r_prime_invariant(model, chi_value, sums)
    rhs, rhs_prime = r_rhs(model, comps, sums)
    return TheoremCheck(mode, lhs, rhs, lhs_prime, rhs_prime)


def anomaly_check(
    model: FibrationModel,
    comps: Optional[Sequence[ComponentSummary]] = None,
    chi_value: Optional[int] = None,
    sums: Optional[Tuple[int, int]] = None,
) -> AnomalyLedger:
    """Gravitational anomaly ledger H - V + 29T = 273.

    T = h11(B) - 1, V = dim of the gauge algebra (u(1) factors contribute
    rank under the abelian convention flag), H splits into charged
    (unlocalized + localized) and uncharged (1 + CxDef) parts.
    """
    comps = summarize_components(model) if comps is None else comps
    sums = singularity_summary(model) if sums is None else sums
    chi_value = euler_characteristic(model, comps) if chi_value is None else chi_value
    gauge = assemble_algebra(model, comps)
    defs = deformation_counts(model, comps, chi_value, sums)

    h_ch_unloc = Fraction(0)
    for comp in comps:
        if comp.algebra is None:
            continue
        h_ch_unloc += comp.genus * named_rep(comp.algebra, "adj").charged_dim()
        row = comp.assignment.row
        if row.has_rho0():
            rho0 = row.resolve(row.rho0, comp.assignment.param)
            h_ch_unloc += (comp.cover_genus - comp.genus) * rho0.charged_dim()
    h_ch_loc = Fraction(0)
    for line in localized_spectrum(model, comps):
        h_ch_loc += line.charged_total

    h_unch = 1 + defs.cx_def
    hyper = h_ch_unloc + h_ch_loc + h_unch
    return AnomalyLedger(
        hyper,
        gauge.dim,
        model.base.h11 - 1,
        h_ch_unloc,
        h_ch_loc,
        h_unch,
        sums[1],
    )


def evaluate(model: FibrationModel) -> SpectrumReport:
    """Full evaluation: spectra, deformation counts, identity and anomaly."""
    notes: List[str] = []
    comps = summarize_components(model)
    sums = singularity_summary(model)
    chi_value = euler_characteristic(model, comps)
    gauge = assemble_algebra(model, comps)
    reps = representation_table(model, comps)
    defs = deformation_counts(model, comps, chi_value, sums)
    theorem = check_theorem(model, comps, chi_value, sums, notes)
    anomaly = anomaly_check(model, comps, chi_value, sums)

    budget_passed = None
    if model.budget is not None:
        if len(comps) != 1:
            raise ModelError("the collision budget check needs exactly one component")
        comp = comps[0]
        b1 = sum(c.count for c in model.collisions if c.kind == Q1)
        b2 = sum(c.count for c in model.collisions if c.kind == Q2)
        check = collision_budget(
            model.base,
            model.components[0].divisor_class,
            comp.assignment.lam,
            model.budget.r1,
            model.budget.r2,
            b1,
            b2,
        )
        budget_passed = check.passed
        if not check.passed:
            notes.append(
                f"collision budget {check.budget} != r1*B1 + r2*B2 = {check.assigned}"
            )
    for comp in comps:
        if comp.assignment.row.has_rho0():
            deg = comp.assignment.row.cover_degree()
            notes.append(
                f"component {comp.index}: monodromy cover of degree {deg}"
            )
        if comp.assignment.row.rho_q2 is not None and any(
            line.source == Q2 and "spin+" in line.label for line in reps
        ):
            notes.append(
                f"component {comp.index}: spin+ chosen for the spin+/- column"
            )
    return SpectrumReport(
        model,
        comps,
        gauge,
        reps,
        sums[0],
        sums[1],
        chi_value,
        defs,
        theorem,
        anomaly,
        budget_passed,
        tuple(notes),
    )
