"""Local standard bases via Mora's tangent-cone normal form.

Quotient dimensions of the localized polynomial ring are read off the
leading-term staircase of a standard basis.  Reduction aborts with a
diagnostic once total degrees cross a configurable cap, which guards
against accidental non-termination on pathological input.
"""

from __future__ import annotations

from itertools import product
from typing import List, Sequence, Tuple

from .poly import (
    MonomialOrder,
    Polynomial,
    PolynomialError,
    _exp_div,
    _exp_divides,
    _exp_lcm,
)

DEFAULT_DEGREE_CAP = 64

INFINITE = float("inf")


class DegreeCapExceeded(PolynomialError):
    """Standard-basis reduction crossed the configured total-degree cap."""


class LocalIdeal:
    """Finite generating set of an ideal in the local ring at the origin."""

    __slots__ = ("generators", "order")

    def __init__(self, generators: Sequence[Polynomial], order: MonomialOrder):
        gens = tuple(g for g in generators)
        if not gens:
            raise PolynomialError("ideal needs at least one generator")
        variables = gens[0].variables
        for g in gens:
            if g.is_zero():
                raise PolynomialError("zero generator")
            if g.variables != variables:
                raise PolynomialError("generators over different variable lists")
        if not order.is_local():
            raise PolynomialError("LocalIdeal requires a local monomial order")
        self.generators = gens
        self.order = order

    @property
    def variables(self):
        return self.generators[0].variables

    def leading_monomials(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(g.leading_monomial(self.order) for g in self.generators)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"LocalIdeal(<{gens}>)"


def _reduce_once(h: Polynomial, f: Polynomial, order: MonomialOrder) -> Polynomial:
    """Cancel the leading term of h against f (lm(f) must divide lm(h))."""
    lm_h = h.leading_monomial(order)
    lm_f = f.leading_monomial(order)
    ratio = h.terms[lm_h] / f.terms[lm_f]
    return h - f.scale_term(ratio, _exp_div(lm_h, lm_f))


def mora_normal_form(
    g: Polynomial,
    basis: Sequence[Polynomial],
    order: MonomialOrder,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> Polynomial:
    """Weak normal form of g modulo basis (Mora's algorithm with ecart).

    The reducer set grows by intermediate remainders whenever the chosen
    divisor has strictly larger ecart, which is what makes the loop
    terminate for local orders.
    """
    h = g
    reducers: List[Polynomial] = list(basis)
    while not h.is_zero():
        if h.total_degree() > degree_cap:
            raise DegreeCapExceeded(
                f"reduction exceeded degree cap {degree_cap}; "
                "raise the cap if the input is legitimately this large"
            )
        lm_h = h.leading_monomial(order)
        candidates = [
            f for f in reducers if _exp_divides(f.leading_monomial(order), lm_h)
        ]
        if not candidates:
            return h
        f = min(candidates, key=lambda p: p.ecart(order))
        if f.ecart(order) > h.ecart(order):
            reducers.append(h)
        h = _reduce_once(h, f, order)
    return h


def _s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lm_f = f.leading_monomial(order)
    lm_g = g.leading_monomial(order)
    lcm = _exp_lcm(lm_f, lm_g)
    left = f.scale_term(1 / f.terms[lm_f], _exp_div(lcm, lm_f))
    right = g.scale_term(1 / g.terms[lm_g], _exp_div(lcm, lm_g))
    return left - right


def local_standard_basis(
    ideal: LocalIdeal, degree_cap: int = DEFAULT_DEGREE_CAP
) -> LocalIdeal:
    """Standard basis of the ideal: every leading term of the ideal is
    divisible by a returned leading term.

    Output is minimal (no leading term divides another), monic, and sorted
    by the order for determinism.  No Buchberger pair criteria are applied;
    at the scale of singularity germs the plain pair loop is already fast,
    and skipping the criteria sidesteps their subtleties for local orders.
    """
    order = ideal.order
    basis: List[Polynomial] = [g.monic(order) for g in ideal.generators]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        s = _s_polynomial(basis[i], basis[j], order)
        if s.is_zero():
            continue
        h = mora_normal_form(s, basis, order, degree_cap)
        if h.is_zero():
            continue
        basis.append(h.monic(order))
        k = len(basis) - 1
        pairs.extend((i2, k) for i2 in range(k))

    # Minimalize: drop generators whose leading term is divisible by another's.
    lms = [g.leading_monomial(order) for g in basis]
    keep: List[Polynomial] = []
    for idx, g in enumerate(basis):
        redundant = False
        for jdx, lm in enumerate(lms):
            if jdx == idx:
                continue
            if _exp_divides(lm, lms[idx]) and (
                lm != lms[idx] or jdx < idx
            ):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    keep.sort(key=lambda g: order.sort_key(g.leading_monomial(order)), reverse=True)
    return LocalIdeal(keep, order)


def quotient_dimension(basis: LocalIdeal, cell_cap: int = 1 << 22):
    """Number of monomials outside the leading-term staircase.

    Returns float('inf') when the staircase misses a coordinate axis, i.e.
    contains no pure power of some variable (a non-isolated singularity
    upstream).  Assumes the input is a standard basis.
    """
    lms = basis.leading_monomials()
    nvars = len(basis.variables)
    if any(sum(e) == 0 for e in lms):
        return 0  # unit ideal

    bounds = []
    for i in range(nvars):
        pure = [
            e[i]
            for e in lms
            if e[i] > 0 and all(x == 0 for j, x in enumerate(e) if j != i)
        ]
        if not pure:
            return INFINITE
        bounds.append(min(pure))

    total_cells = 1
    for b in bounds:
        total_cells *= b
    if total_cells > cell_cap:
        raise PolynomialError(
            f"staircase box has {total_cells} cells, above the cap {cell_cap}"
        )

    count = 0
    for exp in product(*(range(b) for b in bounds)):
        if not any(_exp_divides(lm, exp) for lm in lms):
            count += 1
    return count
