"""Base-surface intersection lattices and divisor-class arithmetic.

Bases are abstract lattices: every downstream formula consumes only
intersection numbers, the canonical class and h^{1,1}(B).  Named
constructors cover the projective plane and the Hirzebruch surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple


class GeometryError(ValueError):
    pass


@dataclass(frozen=True)
class BaseSurface:
    intersection: Tuple[Tuple[int, ...], ...]
    canonical: Tuple[int, ...]
    h11: int
    calabi_yau: bool = True
    name: str = "custom"

    @property
    def rank(self) -> int:
        return len(self.intersection)

    def k_squared(self) -> int:
        return intersect(self, self.canonical, self.canonical)


@dataclass(frozen=True)
class DivisorClass:
    coords: Tuple[int, ...]


def _as_coords(divisor) -> Tuple[int, ...]:
    if isinstance(divisor, DivisorClass):
        return divisor.coords
    return tuple(divisor)


def make_base(
    intersection: Sequence[Sequence[int]],
    canonical: Sequence[int],
    h11: int,
    calabi_yau: bool = True,
    name: str = "custom",
) -> BaseSurface:
    """Validated base surface; the lattice is NS(B), so h11 must equal the
    rank, and the Calabi-Yau consistency flag enforces K^2 = 10 - h11."""
    matrix = tuple(tuple(int(x) for x in row) for row in intersection)
    rank = len(matrix)
    if any(len(row) != rank for row in matrix):
        raise GeometryError("intersection matrix is not square")
    for i in range(rank):
        for j in range(rank):
            if matrix[i][j] != matrix[j][i]:
                raise GeometryError("intersection matrix is not symmetric")
    K = tuple(int(x) for x in canonical)
    if len(K) != rank:
        raise GeometryError("canonical class length does not match the lattice rank")
    if h11 != rank:
        raise GeometryError("h11 must equal the lattice rank (the lattice is NS(B))")
    base = BaseSurface(matrix, K, h11, calabi_yau, name)
    if calabi_yau and base.k_squared() != 10 - h11:
        raise GeometryError(
            f"Calabi-Yau consistency fails: K^2 = {base.k_squared()} != 10 - h11 = {10 - h11}"
        )
    return base


def projective_plane() -> BaseSurface:
    return make_base(((1,),), (-3,), 1, name="P2")


def hirzebruch(n: int) -> BaseSurface:
    """F_n with basis (section s, fiber f): s^2 = -n, s.f = 1, f^2 = 0."""
    if n < 0:
        raise GeometryError("Hirzebruch index must be >= 0")
    return make_base(
        ((-n, 1), (1, 0)), (-2, -(n + 2)), 2, name=f"F{n}"
    )


def named_base(name: str) -> BaseSurface:
    text = name.strip().upper()
    if text == "P2":
        return projective_plane()
    if text.startswith("F") and text[1:].isdigit():
        n = int(text[1:])
        if n > 12:
            raise GeometryError("F_n is supported for n = 0..12")
        return hirzebruch(n)
    raise GeometryError(f"unknown base surface {name!r}")


def intersect(base: BaseSurface, D, E) -> int:
    d = _as_coords(D)
    e = _as_coords(E)
    if len(d) != base.rank or len(e) != base.rank:
        raise GeometryError("divisor class length does not match the base lattice")
    return sum(
        d[i] * base.intersection[i][j] * e[j]
        for i in range(base.rank)
        for j in range(base.rank)
    )


def add(D, E) -> Tuple[int, ...]:
    d, e = _as_coords(D), _as_coords(E)
    return tuple(x + y for x, y in zip(d, e))


def scale(c: int, D) -> Tuple[int, ...]:
    return tuple(c * x for x in _as_coords(D))


def curve_genus(base: BaseSurface, C) -> int:
    """Adjunction: g = 1 + C.(C + K_B)/2."""
    c = _as_coords(C)
    pairing = intersect(base, c, add(c, base.canonical))
    if pairing % 2:
        raise GeometryError("C.(C + K) is odd; class violates adjunction parity")
    g = 1 + pairing // 2
    if g < 0:
        raise GeometryError(f"negative genus {g}: class is not representable by a curve")
    return g


def cover_genus(base: BaseSurface, sigma1, genus: int = None) -> int:
    """Genus of the monodromy cover: g' = g + Sigma1.(Sigma1 - K_B)/2."""
    s = _as_coords(sigma1)
    pairing = intersect(base, s, add(s, scale(-1, base.canonical)))
    if pairing % 2:
        raise GeometryError("Sigma1.(Sigma1 - K) is odd; no integral cover genus")
    if pairing < 0:
        raise GeometryError("Sigma1.(Sigma1 - K) is negative")
    g = curve_genus(base, s) if genus is None else genus
    return g + pairing // 2
