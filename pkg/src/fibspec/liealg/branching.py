"""Branching by weight projection.

A branching is described by an integer matrix mapping Dynkin labels of the
ambient algebra onto Dynkin labels of the subalgebra.  The weight multiset
of a representation is pushed through the matrix and decomposed greedily by
peeling highest-weight orbits; the result is dimension-exact by
construction.

Built-in projections cover the monodromy pairs of the fiber-type table
(su(2k+2) > su(2k+1) > sp(k); so(2n+2) > so(2n+1); su(3) > sp(1); e6 > f4;
so(8) > g2); arbitrary embeddings are accepted via explicit matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .cartan import Algebra, LieAlgebraError, Weight
from .reps import Rep, identify_rep, named_rep
from .weights import height, is_dominant, weight_system, weyl_dim

Matrix = Tuple[Tuple[int, ...], ...]


class BranchingError(LieAlgebraError):
    pass


def apply_projection(matrix: Matrix, weight: Weight) -> Weight:
    return tuple(sum(row[j] * weight[j] for j in range(len(weight))) for row in matrix)


def _compose(outer: Matrix, inner: Matrix) -> Matrix:
    rows = len(outer)
    mid = len(inner)
    cols = len(inner[0])
    return tuple(
        tuple(sum(outer[i][k] * inner[k][j] for k in range(mid)) for j in range(cols))
        for i in range(rows)
    )


def _truncation(n_from: int, n_to: int) -> Matrix:
    """A_{n_from} > A_{n_to}: drop trailing Dynkin labels."""
    return tuple(
        tuple(1 if i == j else 0 for j in range(n_from)) for i in range(n_to)
    )


def _fold_a_to_c(k: int) -> Matrix:
    """A_{2k-1} > C_k diagram folding: b_i = a_i + a_{2k-i}, b_k = a_k."""
    n = 2 * k - 1
    rows = []
    for i in range(k - 1):
        row = [0] * n
        row[i] = 1
        row[n - 1 - i] = 1
        rows.append(tuple(row))
    last = [0] * n
    last[k - 1] = 1
    rows.append(tuple(last))
    return tuple(rows)


def _fold_d_to_b(n: int) -> Matrix:
    """D_{n+1} > B_n: merge the two fork labels."""
    rows = []
    for i in range(n - 1):
        row = [0] * (n + 1)
        row[i] = 1
        rows.append(tuple(row))
    last = [0] * (n + 1)
    last[n - 1] = 1
    last[n] = 1
    rows.append(tuple(last))
    return tuple(rows)


def _fold_e6_to_f4() -> Matrix:
    # E6 nodes: chain 0-1-2-3-4 with node 5 on node 2; automorphism swaps
    # 0<->4 and 1<->3.  F4 nodes: 0,1 long then 2,3 short.
    return (
        (0, 0, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 1, 0, 0),
        (1, 0, 0, 0, 1, 0),
    )


def _fold_d4_to_g2() -> Matrix:
    # D4 outer nodes {0, 2, 3} collapse onto the short g2 node.
    return (
        (1, 0, 1, 1),
        (0, 1, 0, 0),
    )


def registry_projection(ambient: Algebra, sub: Algebra) -> Matrix:
    """Built-in projection for the table's monodromy pairs."""
    a = (ambient.series, ambient.rank)
    s = (sub.series, sub.rank)
    if a == s:
        return _truncation(ambient.rank, ambient.rank)
    if ambient.series == "A" and sub.series == "A" and sub.rank == ambient.rank - 1:
        return _truncation(ambient.rank, sub.rank)
    if ambient.series == "A" and sub.physics.startswith("sp("):
        k = sub.rank if sub.series == "C" else 1
        if ambient.rank == 2 * k:
            # su(2k+1) > sp(k) through su(2k)
            return _compose(_fold_a_to_c(k), _truncation(2 * k, 2 * k - 1))
        if ambient.rank == 2 * k - 1:
            return _fold_a_to_c(k)
    if ambient.series == "D" and sub.series == "B" and sub.rank == ambient.rank - 1:
        return _fold_d_to_b(sub.rank)
    if a == ("E", 6) and s == ("F", 4):
        return _fold_e6_to_f4()
    if a == ("D", 4) and s == ("G", 2):
        return _fold_d4_to_g2()
    raise BranchingError(
        f"no built-in projection for {ambient} > {sub}; pass an explicit matrix"
    )


def decompose_multiset(
    algebra: Algebra, multiset: Dict[Weight, Fraction]
) -> List[Tuple[Weight, Fraction]]:
    """Peel highest-weight orbits off a weight multiset.

    Raises when the leftover maximum is not dominant or a subtraction goes
    negative, which signals a wrong projection.
    """
    remaining = {w: Fraction(m) for w, m in multiset.items() if m != 0}
    parts: List[Tuple[Weight, Fraction]] = []
    while remaining:
        top = max(remaining, key=lambda w: (height(algebra, w), w))
        if not is_dominant(top):
            raise BranchingError(
                f"residual weight {top} is not dominant; no dominant orbit remains"
            )
        mult = remaining[top]
        if mult < 0:
            raise BranchingError(f"negative residual multiplicity at {top}")
        for w, q in weight_system(algebra, top).items():
            left = remaining.get(w, Fraction(0)) - mult * q
            if left < 0:
                raise BranchingError(f"over-subtraction at weight {w}")
            if left == 0:
                remaining.pop(w, None)
            else:
                remaining[w] = left
        parts.append((top, mult))
    return parts


def push_multiset(
    multiset: Dict[Weight, Fraction], matrix: Matrix
) -> Dict[Weight, Fraction]:
    out: Dict[Weight, Fraction] = {}
    for w, m in multiset.items():
        img = apply_projection(matrix, w)
        out[img] = out.get(img, Fraction(0)) + m
    return out


def _part_to_rep(algebra: Algebra, hw: Weight, mult: Fraction) -> Tuple[Rep, Fraction]:
    rep = identify_rep(algebra, hw)
    if rep is None:
        rep = Rep(algebra, f"irrep{list(hw)}", ((Fraction(1), hw),))
    return rep, mult


def branch(
    ambient: Algebra,
    sub: Algebra,
    rep: Rep,
    projection: Optional[Matrix] = None,
) -> List[Tuple[Rep, Fraction]]:
    """Decompose rep under the subalgebra via the projection matrix."""
    matrix = projection or registry_projection(ambient, sub)
    if len(matrix) != sub.rank or any(len(r) != ambient.rank for r in matrix):
        raise BranchingError("projection matrix shape does not match the algebras")
    pushed = push_multiset(rep.weight_multiset(), matrix)
    parts = decompose_multiset(sub, pushed)
    out = [_part_to_rep(sub, hw, m) for hw, m in parts]
    total = sum((m * weyl_dim(sub, hw) for hw, m in parts), Fraction(0))
    if total != rep.dim():
        raise BranchingError("branching lost dimension (projection is wrong)")
    return out


def conjugate_highest_weight(algebra: Algebra, hw: Weight) -> Weight:
    """Highest weight of the conjugate representation."""
    from .weights import dominant_conjugate

    return dominant_conjugate(algebra, tuple(-x for x in hw))
