from fractions import Fraction

import pytest

from fibspec.localring import (
    INFINITE,
    MonomialOrder,
    PolynomialError,
    is_weighted_homogeneous,
    jacobian_ideal,
    milnor_number,
    parse_polynomial,
    tyurina_number,
)

from oracles import jet_milnor, jet_tyurina

V4 = ("z", "x", "y", "w")
V2 = ("x", "y")


def P(text, variables=V2):
    return parse_polynomial(text, variables)


def test_jacobian_generators():
    ideal = jacobian_ideal(P("z^3+x^2+y^2+w^2", V4))
    assert {str(g) for g in ideal.generators} == {"3*z^2", "2*x", "2*y", "2*w"}
    ideal = jacobian_ideal(P("x^2*y"))
    assert {str(g) for g in ideal.generators} == {"2*x*y", "x^2"}


def test_jacobian_rejects_constant():
    with pytest.raises(PolynomialError):
        jacobian_ideal(P("5"))
    with pytest.raises(PolynomialError):
        milnor_number(P("x + 1"))


def test_kleinian_suspension_values():
    assert milnor_number(P("z^3+x^2+y^2+w^2", V4)) == 2
    assert tyurina_number(P("z^3+x^2+y^2+w^2", V4)) == 2
    assert milnor_number(P("z^2+x^2+y^2+w^2", V4)) == 1
    assert tyurina_number(P("z^2+x^2+y^2+w^2", V4)) == 1


def test_fermat_quartic_staircase():
    assert milnor_number(P("x^3+y^3+z^3+w^3", ("x", "y", "z", "w"))) == 16


def test_non_isolated_is_infinite():
    assert milnor_number(P("x^2*y")) == INFINITE


def test_jet_oracle_cross_check():
    # independent dense linear-algebra oracle on small germs
    for text, variables in [
        ("x^3+y^4", V2),          # E6
        ("x^3+x*y^3", V2),        # E7
        ("x^3+y^5", V2),          # E8
        ("x^2*y+y^3", V2),        # D4
        ("z^3+x^2+y^2+w^2", V4),  # suspended A2
    ]:
        f = P(text, variables)
        assert milnor_number(f) == jet_milnor(f)
        assert tyurina_number(f) == jet_tyurina(f)


def test_strict_tyurina_drop_without_weights():
    f = P("x^5+y^5+x^3*y^3")
    mu, tau = milnor_number(f), tyurina_number(f)
    assert (mu, tau) == (jet_milnor(f), jet_tyurina(f))
    assert (mu, tau) == (16, 15)
    assert tau < mu
    assert is_weighted_homogeneous(f) is None


def test_weight_vectors():
    assert is_weighted_homogeneous(P("x^3+y^3+z^3+w^3", ("x", "y", "z", "w"))) == (
        Fraction(1, 3),
    ) * 4
    assert is_weighted_homogeneous(P("x^2+y^3")) == (Fraction(1, 2), Fraction(1, 3))
    w = is_weighted_homogeneous(P("x^2*y+y^3"))
    assert w == (Fraction(1, 3), Fraction(1, 3))


def test_weight_vector_underdetermined_system():
    w = is_weighted_homogeneous(P("x*y"))
    assert w is not None and sum(w) == 1 and all(x > 0 for x in w)


def test_univariate_power():
    for k in (2, 3, 5, 9):
        f = P(f"x^{k}", ("x",))
        assert milnor_number(f) == k - 1
        assert tyurina_number(f) == k - 1


def test_order_permutation_invariance():
    f = P("x^5+y^5+x^3*y^3")
    orders = [MonomialOrder("local", (0, 1)), MonomialOrder("local", (1, 0))]
    values = {milnor_number(f, order) for order in orders}
    assert values == {16}
    g = P("z^3+x^2+y^2+w^2", V4)
    orders = [MonomialOrder("local", p) for p in [(0, 1, 2, 3), (3, 1, 0, 2)]]
    assert {milnor_number(g, order) for order in orders} == {2}


def test_tyurina_never_exceeds_milnor():
    corpus = [
        P("x^2+y^2"),
        P("x^3+y^4"),
        P("x^2*y+y^4"),
        P("x^5+y^5+x^3*y^3"),
        P("z^4+x^2+y^2+w^2", V4),
    ]
    for f in corpus:
        assert tyurina_number(f) <= milnor_number(f)


def test_smooth_point_milnor_zero():
    assert milnor_number(P("x", ("x", "y"))) == 0
