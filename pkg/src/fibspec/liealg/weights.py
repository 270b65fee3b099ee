"""Weight systems: Weyl dimension formula, Freudenthal multiplicities,
Weyl orbits and dominance conjugation.  Everything is exact."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from .cartan import (
    Algebra,
    LieAlgebraError,
    Weight,
    inverse_cartan,
    positive_roots,
    symmetrizer,
)

DEFAULT_WEIGHT_CAP = 10000


def _key(algebra: Algebra) -> Tuple[str, int]:
    return (algebra.series, algebra.rank)


def root_coordinates(algebra: Algebra, weight: Weight) -> Tuple[Fraction, ...]:
    inv = inverse_cartan(*_key(algebra))
    n = algebra.rank
    return tuple(
        sum(inv[i][j] * weight[j] for j in range(n)) for i in range(n)
    )


@lru_cache(maxsize=None)
def _gram_scaled(series: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Integer multiple of the Gram matrix (omega_i, omega_j).

    (mu, nu) = mu^T . diag(d) . A^{-1} . nu up to a positive scale; every use
    below is a ratio of form values, so the scale cancels and the arithmetic
    can stay in plain integers.
    """
    inv = inverse_cartan(series, rank)
    d = symmetrizer(series, rank)
    entries = [[d[j] * inv[j][k] for k in range(rank)] for j in range(rank)]
    denom = 1
    for row in entries:
        for x in row:
            denom = denom * x.denominator // _gcd_int(denom, x.denominator)
    return tuple(
        tuple(int(x * denom) for x in row) for row in entries
    )


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _form(algebra: Algebra, mu, nu) -> int:
    """Scaled invariant form as a plain integer (ratios only)."""
    G = _gram_scaled(*_key(algebra))
    total = 0
    for j, mj in enumerate(mu):
        if mj:
            row = G[j]
            total += mj * sum(row[k] * nu[k] for k in range(len(nu)) if nu[k])
    return total


def bilinear(algebra: Algebra, mu: Weight, nu: Weight) -> Fraction:
    """Invariant symmetric form on the weight space (scale irrelevant)."""
    d = symmetrizer(*_key(algebra))
    coords = root_coordinates(algebra, nu)
    return sum(Fraction(m) * d[j] * coords[j] for j, m in enumerate(mu))


def height(algebra: Algebra, weight: Weight) -> Fraction:
    return sum(root_coordinates(algebra, weight))


def reflect(algebra: Algebra, weight: Weight, i: int) -> Weight:
    """Simple reflection s_i in the fundamental-weight basis."""
    A = algebra.cartan
    wi = weight[i]
    return tuple(w - wi * A[j][i] for j, w in enumerate(weight))


def dominant_conjugate(algebra: Algebra, weight: Weight) -> Weight:
    w = tuple(weight)
    while True:
        for i, x in enumerate(w):
            if x < 0:
                w = reflect(algebra, w, i)
                break
        else:
            return w


def is_dominant(weight: Weight) -> bool:
    return all(x >= 0 for x in weight)


def weyl_orbit(algebra: Algebra, weight: Weight) -> frozenset:
    seen = {tuple(weight)}
    frontier = [tuple(weight)]
    while frontier:
        w = frontier.pop()
        for i in range(algebra.rank):
            r = reflect(algebra, w, i)
            if r not in seen:
                seen.add(r)
                frontier.append(r)
    return frozenset(seen)


def weyl_dim(algebra: Algebra, highest_weight: Weight) -> int:
    """Weyl dimension formula (product over positive roots)."""
    if not is_dominant(highest_weight):
        raise LieAlgebraError(f"weight {highest_weight} is not dominant")
    rho = (1,) * algebra.rank
    lam_rho = tuple(x + 1 for x in highest_weight)
    num = Fraction(1)
    for beta in positive_roots(*_key(algebra)):
        num *= Fraction(_form(algebra, lam_rho, beta), _form(algebra, rho, beta))
    assert num.denominator == 1
    return int(num)


@lru_cache(maxsize=None)
def _weight_system_cached(key, highest_weight: Weight, cap: int):
    series, rank = key
    from .cartan import simple_algebra

    algebra = simple_algebra(series, rank)
    return _freudenthal(algebra, highest_weight, cap)


def weight_system(
    algebra: Algebra, highest_weight: Weight, cap: int = DEFAULT_WEIGHT_CAP
) -> Dict[Weight, int]:
    """All weights of the irreducible module, with multiplicities."""
    dim = weyl_dim(algebra, highest_weight)
    if dim > cap:
        raise LieAlgebraError(
            f"representation dimension {dim} exceeds the weight-system cap {cap}"
        )
    return dict(_weight_system_cached(_key(algebra), tuple(highest_weight), cap))


def _freudenthal(algebra: Algebra, lam: Weight, cap: int):
    n = algebra.rank
    A = algebra.cartan

    # Saturation closure: mu and i with mu_i > 0 pulls in mu - j*alpha_i.
    cols = [tuple(A[r][i] for r in range(n)) for i in range(n)]
    weights = {lam}
    frontier = [lam]
    while frontier:
        mu = frontier.pop()
        for i in range(n):
            if mu[i] > 0:
                w = mu
                for _ in range(mu[i]):
                    w = tuple(x - c for x, c in zip(w, cols[i]))
                    if w not in weights:
                        weights.add(w)
                        frontier.append(w)

    rho = (1,) * n
    lam_rho = tuple(x + 1 for x in lam)
    norm_top = _form(algebra, lam_rho, lam_rho)
    pos = positive_roots(algebra.series, algebra.rank)

    by_depth = sorted(weights, key=lambda m: (height(algebra, tuple(x - y for x, y in zip(lam, m))), m))
    mult: Dict[Weight, int] = {}
    weight_set = weights
    for mu in by_depth:
        if mu == lam:
            mult[mu] = 1
            continue
        acc = 0
        for beta in pos:
            w = mu
            while True:
                w = tuple(x + b for x, b in zip(w, beta))
                if w not in weight_set:
                    break
                m_w = mult.get(w)
                if m_w:
                    acc += m_w * _form(algebra, w, beta)
        mu_rho = tuple(x + 1 for x in mu)
        denom = norm_top - _form(algebra, mu_rho, mu_rho)
        value = Fraction(2 * acc, denom)
        assert value.denominator == 1 and value > 0
        mult[mu] = int(value)

    return tuple(sorted(mult.items()))


def zero_weight_multiplicity(algebra: Algebra, highest_weight: Weight) -> int:
    zero = (0,) * algebra.rank
    return weight_system(algebra, highest_weight).get(zero, 0)
