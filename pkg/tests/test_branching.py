from fractions import Fraction

import pytest

from fibspec.liealg import (
    BranchingError,
    algebra_from_label,
    branch,
    named_rep,
    registry_projection,
)
from fibspec.liealg.weights import weight_system, zero_weight_multiplicity


def _labels(parts):
    return sorted((rep.name, str(mult)) for rep, mult in parts)


def test_su3_to_sp1_fund():
    su3, sp1 = algebra_from_label("su3"), algebra_from_label("sp1")
    out = branch(su3, sp1, named_rep(su3, "fund"))
    assert _labels(out) == [("fund", "1"), ("singlet", "1")]


def test_su4_adjoint_under_su3():
    su4, su3 = algebra_from_label("su4"), algebra_from_label("su3")
    out = branch(su4, su3, named_rep(su4, "adj"))
    # adj + u(1) singlet + fund + conjugate fund (= lambda2 of su(3))
    assert _labels(out) == [
        ("adj", "1"),
        ("fund", "1"),
        ("lambda2", "1"),
        ("singlet", "1"),
    ]
    assert sum(rep.dim() * m for rep, m in out) == 15


def test_identity_projection_is_identity():
    su4 = algebra_from_label("su4")
    eye = tuple(tuple(1 if i == j else 0 for j in range(3)) for i in range(3))
    out = branch(su4, su4, named_rep(su4, "lambda2"), projection=eye)
    assert _labels(out) == [("lambda2", "1")]


def test_so_even_to_odd_vector_and_spin():
    so10, so9 = algebra_from_label("so10"), algebra_from_label("so9")
    out = branch(so10, so9, named_rep(so10, "vect"))
    assert _labels(out) == [("singlet", "1"), ("vect", "1")]
    out = branch(so10, so9, named_rep(so10, "spin+"))
    assert _labels(out) == [("spin", "1")]


def test_e6_f4_and_d4_g2():
    e6, f4 = algebra_from_label("e6"), algebra_from_label("f4")
    assert _labels(branch(e6, f4, named_rep(e6, "27"))) == [("26", "1"), ("singlet", "1")]
    assert _labels(branch(e6, f4, named_rep(e6, "adj"))) == [("26", "1"), ("adj", "1")]
    so8, g2 = algebra_from_label("so8"), algebra_from_label("g2")
    assert _labels(branch(so8, g2, named_rep(so8, "vect"))) == [("7", "1"), ("singlet", "1")]
    assert _labels(branch(so8, g2, named_rep(so8, "adj"))) == [("7", "2"), ("adj", "1")]


def test_branch_preserves_dimension_and_charged_count():
    cases = [
        ("su6", "sp3", "adj"),
        ("su5", "sp2", "fund"),
        ("so12", "so11", "adj"),
        ("e6", "f4", "adj"),
    ]
    for amb_label, sub_label, name in cases:
        amb, sub = algebra_from_label(amb_label), algebra_from_label(sub_label)
        rep = named_rep(amb, name)
        out = branch(amb, sub, rep)
        assert sum(r.dim() * m for r, m in out) == rep.dim()
        # charged dimension drops exactly by the number of nonzero weights
        # that project to zero
        proj = registry_projection(amb, sub)
        newly_zero = 0
        for w, mult in rep.weight_multiset().items():
            if any(w) and not any(
                sum(row[j] * w[j] for j in range(len(w))) for row in proj
            ):
                newly_zero += mult
        charged_out = sum(r.charged_dim() * m for r, m in out)
        assert rep.charged_dim() - newly_zero == charged_out


def test_wrong_projection_reports_residual_weights():
    su4, so7 = algebra_from_label("su4"), algebra_from_label("so7")
    bad = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    with pytest.raises(BranchingError):
        branch(su4, so7, named_rep(su4, "adj"), projection=bad)


def test_missing_registry_pair_requires_matrix():
    with pytest.raises(BranchingError):
        registry_projection(algebra_from_label("e7"), algebra_from_label("g2"))
