"""Simple Lie algebra root data.

Cartan matrix convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so column j
holds the Dynkin labels of the simple root alpha_j.  Weights live in the
fundamental-weight basis (Dynkin labels) as integer tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

Weight = Tuple[int, ...]


class LieAlgebraError(ValueError):
    pass


_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


def cartan_matrix(series: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    n = rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def chain(upto: int):
        for i in range(upto):
            A[i][i + 1] = -1
            A[i + 1][i] = -1

    if series == "A":
        chain(n - 1)
    elif series == "B":
        chain(n - 1)
        A[n - 1][n - 2] = -2  # last root short
    elif series == "C":
        chain(n - 1)
        A[n - 2][n - 1] = -2  # last root long
    elif series == "D":
        chain(n - 2)
        A[n - 3][n - 1] = -1
        A[n - 1][n - 3] = -1
    elif series == "E":
        chain(n - 2)
        A[n - 4][n - 1] = -1
        A[n - 1][n - 4] = -1
    elif series == "F":
        chain(3)
        A[2][1] = -2  # arrow between the two middle nodes
    elif series == "G":
        A[0][1] = -3
        A[1][0] = -1
    else:
        raise LieAlgebraError(f"unknown series {series!r}")
    return tuple(tuple(row) for row in A)


def _validate_pair(series: str, rank: int):
    minimum = {"A": 1, "B": 2, "C": 2, "D": 3}
    if series in minimum:
        if rank < minimum[series]:
            raise LieAlgebraError(f"{series}_{rank} is not in the supported range")
    elif series in _EXCEPTIONAL_RANKS:
        if rank not in _EXCEPTIONAL_RANKS[series]:
            raise LieAlgebraError(f"{series}_{rank} is not a simple algebra")
    else:
        raise LieAlgebraError(f"unknown series {series!r}")


@dataclass(frozen=True)
class Algebra:
    """Root datum of a simple Lie algebra (plus its physics-style name)."""

    series: str
    rank: int
    physics: str

    @property
    def cartan(self) -> Tuple[Tuple[int, ...], ...]:
        return cartan_matrix(self.series, self.rank)

    @property
    def positive_roots(self) -> Tuple[Weight, ...]:
        return positive_roots(self.series, self.rank)

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def highest_root(self) -> Weight:
        return highest_root(self.series, self.rank)

    def __str__(self):
        return self.physics


def _physics_name(series: str, rank: int) -> str:
    if series == "A":
        return f"su({rank + 1})"
    if series == "B":
        return f"so({2 * rank + 1})"
    if series == "C":
        return f"sp({rank})"
    if series == "D":
        return f"so({2 * rank})"
    return f"{series.lower()}{rank}"


def simple_algebra(series: str, rank: int, physics: str = "") -> Algebra:
    """Root datum for a valid (series, rank) pair."""
    series = series.upper()
    _validate_pair(series, rank)
    return Algebra(series, rank, physics or _physics_name(series, rank))


def physics_algebra(name: str, n: int) -> Algebra:
    """Physics-style constructor: su(n)=A_{n-1}, so(2n+1)=B_n, sp(k)=C_k,
    so(2n)=D_n.  sp(1) and so(3) fall back to A_1 root data (the B and C
    series start at rank 2 here); the physics label is preserved.
    """
    name = name.lower()
    if name == "su":
        if n < 2:
            raise LieAlgebraError("su(n) needs n >= 2")
        return simple_algebra("A", n - 1, f"su({n})")
    if name == "sp":
        if n < 1:
            raise LieAlgebraError("sp(k) needs k >= 1")
        if n == 1:
            return Algebra("A", 1, "sp(1)")
        return simple_algebra("C", n, f"sp({n})")
    if name == "so":
        if n == 3:
            return Algebra("A", 1, "so(3)")
        if n >= 5 and n % 2 == 1:
            return simple_algebra("B", (n - 1) // 2, f"so({n})")
        if n >= 6 and n % 2 == 0:
            return simple_algebra("D", n // 2, f"so({n})")
        raise LieAlgebraError(f"so({n}) is not a supported simple algebra")
    if name in ("e", "f", "g"):
        return simple_algebra(name.upper(), n)
    raise LieAlgebraError(f"unknown physics series {name!r}")


def algebra_from_label(label: str) -> Algebra:
    """Parse labels like 'su5', 'su(5)', 'sp2', 'e8', 'g2', 'so11'."""
    text = label.lower().replace("(", "").replace(")", "").strip()
    for prefix in ("su", "sp", "so"):
        if text.startswith(prefix):
            return physics_algebra(prefix, int(text[len(prefix):]))
    for prefix in ("e", "f", "g"):
        if text.startswith(prefix) and text[len(prefix):].isdigit():
            return physics_algebra(prefix, int(text[len(prefix):]))
    raise LieAlgebraError(f"cannot parse algebra label {label!r}")


# -- cached root-system combinatorics ----------------------------------------


@lru_cache(maxsize=None)
def inverse_cartan(series: str, rank: int) -> Tuple[Tuple[Fraction, ...], ...]:
    A = [list(map(Fraction, row)) for row in cartan_matrix(series, rank)]
    n = rank
    aug = [row + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(A)]
    for c in range(n):
        pivot = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def symmetrizer(series: str, rank: int) -> Tuple[int, ...]:
    """Positive integers d with d_i A_{ij} symmetric (root length squares)."""
    A = cartan_matrix(series, rank)
    n = rank
    d: List[Fraction] = [Fraction(0)] * n
    d[0] = Fraction(1)
    todo = [0]
    seen = {0}
    while todo:
        i = todo.pop()
        for j in range(n):
            if j in seen or A[i][j] == 0:
                continue
            # d_j A_{ji} = d_i A_{ij}
            d[j] = d[i] * A[i][j] / A[j][i]
            seen.add(j)
            todo.append(j)
    denom = 1
    for x in d:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for x in ints:
        g = _gcd(g, x)
    return tuple(x // g for x in ints)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@lru_cache(maxsize=None)
def positive_roots_rootcoords(series: str, rank: int) -> Tuple[Tuple[int, ...], ...]:
    """Positive roots as coordinate vectors over the simple roots."""
    A = cartan_matrix(series, rank)
    n = rank

    def labels(c):
        return tuple(sum(A[i][j] * c[j] for j in range(n)) for i in range(n))

    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    # Saturate by height levels so downward string lengths are complete
    # before the upward extension is decided.
    changed = True
    while changed:
        changed = False
        for beta in sorted(roots, key=sum):
            lab = labels(beta)
            for i in range(n):
                # alpha_i-string through beta: q = p - <beta, alpha_i^vee>
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                if p - lab[i] > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        changed = True
    return tuple(sorted(roots, key=lambda c: (sum(c), c)))


@lru_cache(maxsize=None)
def positive_roots(series: str, rank: int) -> Tuple[Weight, ...]:
    """Positive roots in the fundamental-weight basis (Dynkin labels)."""
    A = cartan_matrix(series, rank)
    n = rank
    out = []
    for c in positive_roots_rootcoords(series, rank):
        out.append(tuple(sum(A[i][j] * c[j] for j in range(n)) for i in range(n)))
    return tuple(out)


@lru_cache(maxsize=None)
def highest_root(series: str, rank: int) -> Weight:
    coords = positive_roots_rootcoords(series, rank)
    top = max(coords, key=lambda c: (sum(c), c))
    A = cartan_matrix(series, rank)
    n = rank
    return tuple(sum(A[i][j] * top[j] for j in range(n)) for i in range(n))
