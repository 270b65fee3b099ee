"""Independent oracles used to freeze expected values.

The jet-space oracle computes local quotient dimensions by dense linear
algebra over the rationals: dim of polynomials of degree < N modulo the
span of all truncated generator multiples, stabilized over increasing N.
It shares nothing with the standard-basis route it cross-checks.
"""

from fractions import Fraction
from itertools import product

from fibspec.localring.poly import Polynomial


def monomials_below(nvars: int, bound: int):
    out = [
        exp
        for exp in product(range(bound), repeat=nvars)
        if sum(exp) < bound
    ]
    out.sort()
    return out


def _rank(rows):
    """Row rank by fraction-free Gaussian elimination."""
    mat = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    while col < ncols and rank < len(mat):
        pivot = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            if mat[i][col] != 0:
                factor = Fraction(mat[i][col], pv)
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def jet_quotient_dimension(generators, bound: int) -> int:
    """dim of (polynomials of degree < bound) modulo <generators> + m^bound."""
    nvars = len(generators[0].variables)
    basis = monomials_below(nvars, bound)
    index = {exp: i for i, exp in enumerate(basis)}
    rows = []
    for gen in generators:
        gen_min = min(sum(e) for e in gen.terms)
        for shift in monomials_below(nvars, bound - gen_min):
            row = [0] * len(basis)
            nonzero = False
            for exp, coeff in gen.terms.items():
                total = tuple(a + b for a, b in zip(exp, shift))
                if sum(total) < bound:
                    row[index[total]] += coeff
                    nonzero = True
            if nonzero:
                rows.append(row)
    if not rows:
        return len(basis)
    return len(basis) - _rank(rows)


def jet_milnor(poly: Polynomial, start: int = 4, limit: int = 24) -> int:
    """Milnor number via the jet oracle, stabilized over growing bounds."""
    gens = [poly.diff(i) for i in range(len(poly.variables))]
    gens = [g for g in gens if not g.is_zero()]
    return _stabilize(gens, start, limit)


def jet_tyurina(poly: Polynomial, start: int = 4, limit: int = 24) -> int:
    gens = [poly] + [poly.diff(i) for i in range(len(poly.variables))]
    gens = [g for g in gens if not g.is_zero()]
    return _stabilize(gens, start, limit)


def _stabilize(gens, start, limit):
    previous = None
    bound = start
    while bound <= limit:
        value = jet_quotient_dimension(gens, bound)
        if previous is not None and value == previous:
            return value
        previous = value
        bound += 2
    raise AssertionError(f"jet oracle did not stabilize below bound {limit}")
