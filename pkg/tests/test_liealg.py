from fractions import Fraction

import pytest

from fibspec.liealg import (
    LieAlgebraError,
    algebra_from_label,
    dominant_conjugate,
    identify_rep,
    named_rep,
    physics_algebra,
    reflect,
    simple_algebra,
    weight_system,
    weyl_dim,
)


def test_simple_algebra_valid_pairs():
    assert simple_algebra("A", 1).dim == 3
    assert simple_algebra("G", 2).dim == 14
    assert simple_algebra("E", 8).dim == 248
    for series, rank in [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("F", 3), ("G", 1)]:
        with pytest.raises(LieAlgebraError):
            simple_algebra(series, rank)


def test_physics_names():
    assert physics_algebra("su", 5).series == "A" and physics_algebra("su", 5).rank == 4
    assert physics_algebra("so", 7).series == "B"
    assert physics_algebra("so", 10).series == "D"
    assert physics_algebra("sp", 3).series == "C"
    assert physics_algebra("sp", 1).series == "A"  # rank-1 fallback
    assert physics_algebra("so", 3).series == "A"
    with pytest.raises(LieAlgebraError):
        physics_algebra("so", 4)


def test_dimension_formulas():
    for n in range(1, 7):
        assert simple_algebra("A", n).dim == n * (n + 2)
    for n in range(2, 7):
        assert simple_algebra("B", n).dim == n * (2 * n + 1)
        assert simple_algebra("C", n).dim == n * (2 * n + 1)
    for n in range(3, 7):
        assert simple_algebra("D", n).dim == n * (2 * n - 1)


def test_weyl_dims_from_table_anchor_points():
    assert weyl_dim(algebra_from_label("su3"), (1, 0)) == 3
    assert weyl_dim(algebra_from_label("so7"), (0, 0, 1)) == 8
    f4 = algebra_from_label("f4")
    assert named_rep(f4, "26").dim() == 26
    g2 = algebra_from_label("g2")
    assert named_rep(g2, "7").dim() == 7
    e6 = algebra_from_label("e6")
    assert named_rep(e6, "27").dim() == 27
    e7 = algebra_from_label("e7")
    assert named_rep(e7, "56").dim() == 56


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(LieAlgebraError):
        weyl_dim(algebra_from_label("su3"), (1, -1))


def test_weight_system_small_cases():
    su2 = algebra_from_label("su2")
    assert weight_system(su2, (1,)) == {(1,): 1, (-1,): 1}
    assert weight_system(su2, (2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    g2 = algebra_from_label("g2")
    seven = named_rep(g2, "7")
    ws = seven.weight_multiset()
    assert sum(ws.values()) == 7
    assert ws[(0, 0)] == 1  # six nonzero weights plus one zero weight
    assert seven.charged_dim() == 6


def test_weight_system_cap():
    e8 = algebra_from_label("e8")
    with pytest.raises(LieAlgebraError):
        weight_system(e8, (1, 0, 0, 0, 0, 0, 0, 1), cap=100)


def test_charged_dims_match_table_formulas():
    sun = algebra_from_label("su5")
    assert named_rep(sun, "adj").charged_dim() == 20  # n^2 - n at n = 5
    spk = algebra_from_label("sp3")
    assert named_rep(spk, "lambda2_0").charged_dim() == 2 * 9 - 6
    assert named_rep(spk, "fund", Fraction(1, 2)).charged_dim() == 3
    e7 = algebra_from_label("e7")
    assert named_rep(e7, "56", Fraction(1, 2)).charged_dim() == 28


def test_charged_adj_is_dim_minus_rank_everywhere():
    labels = ["su2", "su4", "su6", "so7", "so9", "so8", "so12", "sp2", "sp4", "g2", "f4", "e6", "e7", "e8"]
    for label in labels:
        a = algebra_from_label(label)
        assert named_rep(a, "adj").charged_dim() == a.dim - a.rank


def test_weyl_closure_of_weight_systems():
    for label, name in [("su4", "lambda2"), ("sp2", "lambda2_0"), ("so9", "spin"), ("g2", "7")]:
        a = algebra_from_label(label)
        rep = named_rep(a, name)
        for _, hw in rep.parts:
            ws = weight_system(a, hw)
            for i in range(a.rank):
                reflected = {}
                for w, m in ws.items():
                    reflected[reflect(a, w, i)] = reflected.get(reflect(a, w, i), 0) + m
                assert reflected == ws


def test_identify_rep():
    su5 = algebra_from_label("su5")
    assert identify_rep(su5, su5.highest_root).name == "adj"
    assert identify_rep(su5, (1, 0, 0, 0)).name == "fund"
    # any Weyl conjugate identifies the same rep
    w = reflect(su5, reflect(su5, (1, 0, 0, 0), 0), 1)
    assert identify_rep(su5, w).name == "fund"
    g2 = algebra_from_label("g2")
    assert identify_rep(g2, (5, 5)) is None


def test_identify_rep_weyl_invariance_bulk():
    so10 = algebra_from_label("so10")
    spin = named_rep(so10, "spin+")
    hw = spin.parts[0][1]
    w = hw
    for i in (0, 3, 1, 4, 2):
        w = reflect(so10, w, i)
    got = identify_rep(so10, w)
    assert got is not None and got.name == "spin+"


def test_dominant_conjugate_idempotent():
    so11 = algebra_from_label("so11")
    w = (-2, 1, 0, -1, 3)
    dom = dominant_conjugate(so11, w)
    assert all(x >= 0 for x in dom)
    assert dominant_conjugate(so11, dom) == dom


def test_sp1_lambda2_is_singlet():
    sp1 = algebra_from_label("sp1")
    rep = named_rep(sp1, "lambda2")
    assert rep.dim() == 1 and rep.charged_dim() == 0
