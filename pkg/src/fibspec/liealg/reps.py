"""Named representations, charged dimensions and weight identification.

The registry carries exactly the representation names that occur in the
fiber-type table: adj, fund, lambda2, lambda2_0, vect, spin, spin+/-,
the 7 of g2, 26 of f4, 27 of e6, 56 of e7, and the singlet.  A Rep may be a
formal sum of irreducible parts (e.g. lambda2 of sp(k) carries a singlet
summand) and may carry a rational prefactor such as 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from .cartan import Algebra, LieAlgebraError, Weight, highest_root
from .weights import (
    dominant_conjugate,
    weight_system,
    weyl_dim,
    zero_weight_multiplicity,
)

Part = Tuple[Fraction, Weight]


@dataclass(frozen=True)
class Rep:
    """Formal non-negative rational combination of irreducibles."""

    algebra: Algebra
    name: str
    parts: Tuple[Part, ...]
    prefactor: Fraction = Fraction(1)

    def dim(self) -> Fraction:
        return self.prefactor * sum(
            (m * weyl_dim(self.algebra, hw) for m, hw in self.parts), Fraction(0)
        )

    def zero_weight_multiplicity(self) -> Fraction:
        return self.prefactor * sum(
            (m * zero_weight_multiplicity(self.algebra, hw) for m, hw in self.parts),
            Fraction(0),
        )

    def charged_dim(self) -> Fraction:
        return self.dim() - self.zero_weight_multiplicity()

    def weight_multiset(self) -> Dict[Weight, Fraction]:
        out: Dict[Weight, Fraction] = {}
        for m, hw in self.parts:
            for w, q in weight_system(self.algebra, hw).items():
                out[w] = out.get(w, Fraction(0)) + self.prefactor * m * q
        return out

    def label(self) -> str:
        if self.prefactor == 1:
            return self.name
        if self.prefactor == Fraction(1, 2):
            return f"1/2 {self.name}"
        return f"{self.prefactor} x {self.name}"

    def __str__(self):
        return self.label()


def _fundamental(algebra: Algebra, index: int) -> Weight:
    return tuple(1 if i == index else 0 for i in range(algebra.rank))


def _singlet_weight(algebra: Algebra) -> Weight:
    return (0,) * algebra.rank


@lru_cache(maxsize=None)
def _fundamental_dims(series: str, rank: int) -> Tuple[int, ...]:
    from .cartan import simple_algebra

    algebra = simple_algebra(series, rank)
    return tuple(
        weyl_dim(algebra, _fundamental(algebra, i)) for i in range(rank)
    )


def _fundamental_by_dim(algebra: Algebra, dim: int) -> Weight:
    dims = _fundamental_dims(algebra.series, algebra.rank)
    for i, d in enumerate(dims):
        if d == dim:
            return _fundamental(algebra, i)
    raise LieAlgebraError(f"{algebra} has no fundamental of dimension {dim}")


def _physics_series(algebra: Algebra) -> str:
    return algebra.physics.split("(")[0]


def _irrep_parts(algebra: Algebra, name: str) -> Tuple[Part, ...]:
    """Constituents of a named representation, as (multiplicity, hw) pairs."""
    one = Fraction(1)
    series = algebra.series
    phys = _physics_series(algebra)
    r = algebra.rank
    if name == "singlet":
        return ((one, _singlet_weight(algebra)),)
    if name == "adj":
        return ((one, highest_root(series, r)),)
    if name == "fund":
        if series in ("A", "C"):
            return ((one, _fundamental(algebra, 0)),)
        raise LieAlgebraError(f"'fund' is not registered for {algebra}")
    if name == "lambda2":
        # exterior square of the fundamental
        if phys == "su":
            if r == 1:
                return ((one, _singlet_weight(algebra)),)
            return ((one, _fundamental(algebra, 1)),)
        if phys == "sp":
            if r == 1:
                return ((one, _singlet_weight(algebra)),)
            return ((one, _fundamental(algebra, 1)), (one, _singlet_weight(algebra)))
        raise LieAlgebraError(f"'lambda2' is not registered for {algebra}")
    if name == "lambda2_0":
        if phys == "sp" and r >= 2:
            return ((one, _fundamental(algebra, 1)),)
        raise LieAlgebraError(f"'lambda2_0' is not registered for {algebra}")
    if name == "vect":
        if series in ("B", "D"):
            return ((one, _fundamental(algebra, 0)),)
        raise LieAlgebraError(f"'vect' is not registered for {algebra}")
    if name == "spin":
        if series == "B":
            return ((one, _fundamental(algebra, r - 1)),)
        raise LieAlgebraError(f"'spin' is not registered for {algebra}")
    if name in ("spin+", "spin-"):
        # either half-spin of so(2n); charged dimensions agree, the report
        # records which was chosen
        if series == "D":
            idx = r - 1 if name == "spin+" else r - 2
            return ((one, _fundamental(algebra, idx)),)
        raise LieAlgebraError(f"{name!r} is not registered for {algebra}")
    if name == "7":
        if series == "G":
            return ((one, _fundamental_by_dim(algebra, 7)),)
    if name == "26":
        if series == "F":
            return ((one, _fundamental_by_dim(algebra, 26)),)
    if name == "27":
        if series == "E" and r == 6:
            return ((one, _fundamental_by_dim(algebra, 27)),)
    if name == "56":
        if series == "E" and r == 7:
            return ((one, _fundamental_by_dim(algebra, 56)),)
    raise LieAlgebraError(f"representation {name!r} is not registered for {algebra}")


def named_rep(algebra: Algebra, name: str, prefactor=Fraction(1)) -> Rep:
    return Rep(algebra, name, _irrep_parts(algebra, name), Fraction(prefactor))


def composite_rep(
    algebra: Algebra, pieces: Sequence[Tuple[object, str]], label: Optional[str] = None
) -> Rep:
    """Formal sum like ((1, 'lambda2'), (2, 'fund')) -> 'lambda2 + 2 x fund'."""
    parts = []
    names = []
    for mult, name in pieces:
        m = Fraction(mult)
        for q, hw in _irrep_parts(algebra, name):
            parts.append((m * q, hw))
        names.append(name if m == 1 else f"{m} x {name}")
    return Rep(algebra, label or " + ".join(names), tuple(parts))


# Names eligible as identify_rep answers (single irreducible constituent,
# matched by extremal weight).
_IDENTIFIABLE = (
    "fund",
    "lambda2",
    "lambda2_0",
    "vect",
    "spin",
    "spin+",
    "spin-",
    "7",
    "26",
    "27",
    "56",
)


def identify_rep(algebra: Algebra, weight: Weight) -> Optional[Rep]:
    """Match a weight (fundamental-weight basis) against the registry.

    The weight is Weyl-conjugated into the dominant chamber and compared
    with the extremal (= highest) weights of the registered names.  Returns
    None when unrecognized.
    """
    if len(weight) != algebra.rank:
        raise LieAlgebraError("weight length does not match algebra rank")
    dom = dominant_conjugate(algebra, tuple(weight))
    if dom == _singlet_weight(algebra):
        return named_rep(algebra, "singlet")
    if dom == algebra.highest_root:
        return named_rep(algebra, "adj")
    for name in _IDENTIFIABLE:
        try:
            parts = _irrep_parts(algebra, name)
        except LieAlgebraError:
            continue
        if len(parts) == 1 and parts[0][1] == dom:
            return named_rep(algebra, name)
    return None
