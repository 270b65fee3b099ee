"""Localized representations through adjoint branching.

The adjoint of the restricted-surface algebra at the collision point is
decomposed under the after-base-change algebra; stripping its adjoint and
the singlet remainder leaves a conjugate pair whose half is pushed down to
the gauge algebra and scaled by 1/b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..liealg.branching import (
    BranchingError,
    conjugate_highest_weight,
    decompose_multiset,
    push_multiset,
    registry_projection,
)
from ..liealg.cartan import Algebra, Weight
from ..liealg.reps import Rep, identify_rep, named_rep
from ..liealg.weights import weight_system


@dataclass(frozen=True)
class KVResult:
    target: Algebra
    parts: Tuple[Tuple[Weight, Fraction], ...]
    singlet_dim: Fraction  # recorded size of the stripped singlet remainder
    b: int

    def as_rep(self) -> Optional[Rep]:
        if not self.parts:
            return None
        pieces = []
        names = []
        for hw, mult in self.parts:
            pieces.append((mult, hw))
            known = identify_rep(self.target, hw)
            base = known.name if known is not None else f"irrep{list(hw)}"
            names.append(base if mult == 1 else f"{mult} x {base}")
        return Rep(self.target, " + ".join(names), tuple(pieces))

    def charged_dim(self) -> Fraction:
        rep = self.as_rep()
        return rep.charged_dim() if rep is not None else Fraction(0)


def _subtract_rep(ws: Dict[Weight, Fraction], algebra: Algebra, hw: Weight, mult=1):
    for w, q in weight_system(algebra, hw).items():
        left = ws.get(w, Fraction(0)) - Fraction(mult) * q
        if left < 0:
            raise BranchingError(f"adjoint decomposition under-runs at weight {w}")
        if left == 0:
            ws.pop(w, None)
        else:
            ws[w] = left


def katz_vafa(ctx, gauge_algebra: Algebra, rho0: Optional[Rep] = None) -> KVResult:
    """Decompose adj(g_Q) per the branching method and return rho_Q.

    ctx carries (g_q, g_qs, b, optional explicit projections, branch-point
    flag); rho0 is the unlocalized representation stripped in halves at
    monodromy branch points.
    """
    g_q, g_qs = ctx.g_q, ctx.g_qs
    proj = ctx.projection or registry_projection(g_q, g_qs)
    adj_ws = {
        w: Fraction(m)
        for w, m in weight_system(g_q, g_q.highest_root).items()
    }
    pushed = push_multiset(adj_ws, proj)

    # Strip adj(g_qs), then every remaining zero weight (the u(1) summands
    # plus the rho_sing remainder, whose size is recorded, not constrained).
    _subtract_rep(pushed, g_qs, g_qs.highest_root)
    zero = (0,) * g_qs.rank
    singlets = pushed.pop(zero, Fraction(0))

    if not pushed:
        return KVResult(gauge_algebra, (), singlets, ctx.b)

    # The leftover is a conjugate pair rho-hat + conjugate(rho-hat).
    parts = decompose_multiset(g_qs, pushed)
    remaining = {hw: m for hw, m in parts}
    hat: List[Tuple[Weight, Fraction]] = []
    for hw in sorted(remaining):
        m = remaining.get(hw, Fraction(0))
        if m == 0:
            continue
        conj = conjugate_highest_weight(g_qs, hw)
        if conj == hw:
            hat.append((hw, m / 2))
            remaining[hw] = Fraction(0)
        else:
            if remaining.get(conj, Fraction(0)) != m:
                raise BranchingError(
                    "leftover of the adjoint decomposition is not a conjugate pair"
                )
            hat.append((hw, m))
            remaining[hw] = Fraction(0)
            remaining[conj] = Fraction(0)

    # Push rho-hat down to the gauge algebra.
    if g_qs == gauge_algebra and ctx.target_projection is None:
        target_proj = None
    else:
        target_proj = ctx.target_projection or registry_projection(g_qs, gauge_algebra)

    hat_ws: Dict[Weight, Fraction] = {}
    for hw, m in hat:
        for w, q in weight_system(g_qs, hw).items():
            hat_ws[w] = hat_ws.get(w, Fraction(0)) + m * q
    if target_proj is not None:
        hat_ws = push_multiset(hat_ws, target_proj)

    zero = (0,) * gauge_algebra.rank
    singlets += hat_ws.pop(zero, Fraction(0))

    if ctx.branch_point:
        if rho0 is None:
            raise BranchingError("branch point requires the component's rho0")
        for w, q in rho0.weight_multiset().items():
            if w == zero:
                continue
            left = hat_ws.get(w, Fraction(0)) - q / 2
            if left < 0:
                raise BranchingError("rho0 half-stripping under-runs")
            if left == 0:
                hat_ws.pop(w, None)
            else:
                hat_ws[w] = left

    final = decompose_multiset(gauge_algebra, {w: m for w, m in hat_ws.items() if m})
    scaled = tuple((hw, m / ctx.b) for hw, m in final)
    return KVResult(gauge_algebra, scaled, singlets, ctx.b)
