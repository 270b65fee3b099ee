"""Milnor and Tyurina numbers of isolated hypersurface germs.

Both are quotient dimensions of the local ring at the origin: the Milnor
number divides out the Jacobian ideal of the germ, the Tyurina number also
divides out the germ itself.  Non-isolated singularities yield float('inf')
rather than an error so callers can tell bad geometry from broken plumbing.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .poly import MonomialOrder, Polynomial, PolynomialError
from .standard import (
    DEFAULT_DEGREE_CAP,
    LocalIdeal,
    local_standard_basis,
    quotient_dimension,
)


def _check_germ(f: Polynomial):
    if f.is_zero():
        raise PolynomialError("zero polynomial is not a singularity germ")
    if f.constant_term() != 0:
        raise PolynomialError("germ must vanish at the origin (f(0) = 0)")
    if f.is_constant():
        raise PolynomialError("constant polynomial has no Jacobian ideal")


def jacobian_ideal(f: Polynomial, order: Optional[MonomialOrder] = None) -> LocalIdeal:
    """Ideal of the partial derivatives of f; zero partials are omitted."""
    _check_germ(f)
    order = order or MonomialOrder(MonomialOrder.LOCAL)
    partials = [f.diff(i) for i in range(len(f.variables))]
    partials = [p for p in partials if not p.is_zero()]
    if not partials:
        raise PolynomialError("all partial derivatives vanish")
    return LocalIdeal(partials, order)


def milnor_number(
    f: Polynomial,
    order: Optional[MonomialOrder] = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
):
    """dim of the local ring modulo the Jacobian ideal; inf if non-isolated."""
    ideal = jacobian_ideal(f, order)
    return quotient_dimension(local_standard_basis(ideal, degree_cap))


def tyurina_number(
    f: Polynomial,
    order: Optional[MonomialOrder] = None,
    degree_cap: int = DEFAULT_DEGREE_CAP,
):
    """dim of the local ring modulo <f, partials of f>; inf if non-isolated."""
    _check_germ(f)
    order = order or MonomialOrder(MonomialOrder.LOCAL)
    gens = [f] + [f.diff(i) for i in range(len(f.variables))]
    gens = [p for p in gens if not p.is_zero()]
    ideal = LocalIdeal(gens, order)
    return quotient_dimension(local_standard_basis(ideal, degree_cap))


# -- weighted homogeneity ----------------------------------------------------


def _rref(rows: List[List[Fraction]]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [x - factor * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def _fourier_motzkin(constraints: List[Tuple[List[Fraction], Fraction]], k: int):
    """Find t in Q^k with a.t + c > 0 for every (a, c), or None.

    Plain Fourier-Motzkin elimination; all constraints are strict, which is
    fine for an open feasible region over the rationals.
    """
    if k == 0:
        return [] if all(c > 0 for _, c in constraints) else None
    lowers, uppers, rest = [], [], []
    for a, c in constraints:
        coeff = a[k - 1]
        reduced = (a[: k - 1], c)
        if coeff == 0:
            rest.append(reduced)
        elif coeff > 0:
            # t_k > -(a'.t' + c)/coeff
            lowers.append(([-x / coeff for x in a[: k - 1]], -c / coeff))
        else:
            # t_k < -(a'.t' + c)/coeff
            uppers.append(([-x / coeff for x in a[: k - 1]], -c / coeff))
    combined = list(rest)
    for la, lc in lowers:
        for ua, uc in uppers:
            combined.append(([u - l for u, l in zip(ua, la)], uc - lc))
    t_rest = _fourier_motzkin(combined, k - 1)
    if t_rest is None:
        return None

    def evaluate(a, c):
        return sum(x * t for x, t in zip(a, t_rest)) + c

    lo = max((evaluate(a, c) for a, c in lowers), default=None)
    hi = min((evaluate(a, c) for a, c in uppers), default=None)
    if lo is not None and hi is not None:
        t_last = (lo + hi) / 2
    elif lo is not None:
        t_last = lo + 1
    elif hi is not None:
        t_last = hi - 1
    else:
        t_last = Fraction(1)
    return t_rest + [t_last]


def is_weighted_homogeneous(f: Polynomial) -> Optional[Tuple[Fraction, ...]]:
    """Positive rational weights w with sum_i w_i e_i = 1 for every exponent
    vector e of f, or None when no such weights exist.

    Note this tests the polynomial in the given coordinates; it does not
    search for an analytic change of coordinates.
    """
    if f.is_zero():
        raise PolynomialError("zero polynomial")
    nvars = len(f.variables)
    exps = sorted(f.terms)
    rows = [[Fraction(e[i]) for i in range(nvars)] + [Fraction(1)] for e in exps]
    mat, pivots = _rref(rows)
    for row in mat:
        if all(x == 0 for x in row[:-1]) and row[-1] != 0:
            return None

    free = [c for c in range(nvars) if c not in pivots]
    # Particular solution with free variables set to parameters t.
    # w_c = particular[c] + sum_j coeffs[c][j] * t_j
    particular = [Fraction(0)] * nvars
    coeffs = [[Fraction(0)] * len(free) for _ in range(nvars)]
    for j, c in enumerate(free):
        coeffs[c][j] = Fraction(1)
    for r, pc in enumerate(pivots):
        particular[pc] = mat[r][-1]
        for j, fc in enumerate(free):
            coeffs[pc][j] = -mat[r][fc]

    constraints = [(coeffs[c], particular[c]) for c in range(nvars)]
    t = _fourier_motzkin(constraints, len(free))
    if t is None:
        return None
    weights = tuple(
        particular[c] + sum(coeffs[c][j] * t[j] for j in range(len(free)))
        for c in range(nvars)
    )
    assert all(w > 0 for w in weights)
    for e in exps:
        assert sum(w * x for w, x in zip(weights, e)) == 1
    return weights
