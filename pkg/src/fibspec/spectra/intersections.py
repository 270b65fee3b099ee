"""Localized representations read off intersection numbers.

Fiber-component curves live in an ambient integer lattice together with a
pairing matrix against the ruled divisors; the weight of a curve is minus
its pairing vector.  The ruling pairings must reproduce the negative Cartan
matrix, the orbit of a fiber class under ruling shifts realizes the full
weight system, and the multiplicity is 1/2 exactly when that curve orbit is
symmetric under negation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..liealg.cartan import Algebra, LieAlgebraError, inverse_cartan
from ..liealg.reps import Rep, identify_rep
from ..liealg.weights import dominant_conjugate, weight_system

Vector = Tuple[int, ...]


class IntersectionError(LieAlgebraError):
    pass


@dataclass(frozen=True)
class LocalizedRep:
    rep: Optional[Rep]
    delta: Fraction
    excluded_adjoint: bool
    weight: Vector

    def charged_contribution(self) -> Fraction:
        if self.rep is None or self.excluded_adjoint:
            return Fraction(0)
        return self.delta * self.rep.charged_dim()


def _pair(curve: Sequence[int], pairing) -> Vector:
    rank = len(pairing[0])
    return tuple(
        sum(curve[i] * pairing[i][l] for i in range(len(curve))) for l in range(rank)
    )


def localized_rep_from_intersections(
    algebra: Algebra,
    fiber_class: Sequence[int],
    ruling_classes: Sequence[Sequence[int]],
    pairing: Sequence[Sequence[int]],
) -> LocalizedRep:
    """Identify the representation attached to a fiber-component curve.

    fiber_class and ruling_classes are vectors in an ambient curve lattice;
    pairing[i][l] is the intersection of the i-th ambient basis vector with
    the l-th ruled divisor.  The weight of a curve C is -(C . D_l)_l.
    """
    rank = algebra.rank
    if len(ruling_classes) != rank:
        raise IntersectionError("need one ruling class per Cartan generator")
    if any(len(row) != rank for row in pairing):
        raise IntersectionError("pairing rows must have length rank")

    A = algebra.cartan
    for k, ruling in enumerate(ruling_classes):
        got = tuple(-x for x in _pair(ruling, pairing))
        expected = tuple(A[l][k] for l in range(rank))  # labels of alpha_k
        if got != expected:
            raise IntersectionError(
                f"ruling {k} pairs as {got}, not as the Cartan column {expected}; "
                "the ruling pairing matrix must be the negative Cartan matrix"
            )

    weight = tuple(-x for x in _pair(fiber_class, pairing))
    dom = dominant_conjugate(algebra, weight)
    if dom == algebra.highest_root:
        # adjoint orbit: excluded from the localized sum
        from ..liealg.reps import named_rep

        return LocalizedRep(named_rep(algebra, "adj"), Fraction(1), True, weight)
    rep = identify_rep(algebra, weight)
    if rep is None or rep.name == "singlet":
        raise IntersectionError(
            f"weight {weight} is not an extremal weight of any registered representation"
        )

    # Curve orbit: every weight of the representation is reached from the
    # fiber class by integer ruling shifts (Freudenthal multiset; the shift
    # coefficients come from the inverse Cartan matrix).
    inv = inverse_cartan(algebra.series, algebra.rank)
    hw = rep.parts[0][1]
    orbit: List[Vector] = []
    for mu in weight_system(algebra, hw):
        diff = tuple(m - w for m, w in zip(mu, weight))
        coeffs = []
        for i in range(rank):
            c = sum(inv[i][j] * diff[j] for j in range(rank))
            if c.denominator != 1:
                raise IntersectionError(
                    f"weight {mu} is not reachable from {weight} by root shifts"
                )
            coeffs.append(int(c))
        curve = list(fiber_class)
        for k, ck in enumerate(coeffs):
            if ck:
                curve = [x + ck * y for x, y in zip(curve, ruling_classes[k])]
        orbit.append(tuple(curve))

    orbit_set = frozenset(orbit)
    negated = frozenset(tuple(-x for x in c) for c in orbit_set)
    delta = Fraction(1, 2) if orbit_set == negated else Fraction(1)
    return LocalizedRep(rep, delta, False, weight)
