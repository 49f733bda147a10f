import numpy as np
import pytest

from picard_lab import families
from picard_lab.algebra import GF, MultiPoly, RationalFunction, TruncatedSeries, parse_poly
from picard_lab.weierstrass import discriminant

F2, F3, F4 = GF(2), GF(3), GF(4)

# coefficient lists frozen from an independent sympy expansion
J_TILDE_CHAR3 = [0, 0, 0, 0, 0, 0, 1, 0, 2, 0, 0, 0, 1, 0, 2, 0, 0, 0, 1, 0, 2, 0, 0, 0]
J_TILDE_CHAR2 = [0] * 12 + [1, 0, 0, 1] + [0] * 8
HESSE_MODEL = ("mu", "mu^2", "mu^3 + 1", "mu^4 + mu", "mu^6 + 1")


# -- finite groups ------------------------------------------------------------


@pytest.mark.parametrize(
    "make,order", [(families.gl2f3, 48), (families.sl2f3, 24), (families.s3_mobius, 6), (lambda: families.cyclic_group(5), 5)]
)
def test_group_orders(make, order):
    G = make()
    assert G.order == order
    assert G.check_axioms()


def test_sl2_is_det_one():
    G = families.gl2f3()
    S = families.sl2f3()
    assert {e for e in G.elements if families.det3(e) == 1} == set(S.elements)


def test_permuted_group():
    G = families.s3_mobius()
    perm = [3, 1, 5, 0, 2, 4]
    P = G.permuted(perm)
    assert P.check_axioms()
    assert sorted(P.elements) == sorted(G.elements)


# -- series actions -------------------------------------------------------------


def test_mobius_series():
    mu = TruncatedSeries.mu(F3, 8)
    beta = families.mobius_series(F3, (1, 0, -1, 1), 8)
    assert beta == TruncatedSeries.from_values(F3, [0] + [1] * 7, 8)
    assert families.mobius_series(F3, (-1, 0, 0, 1), 8) == -mu


def test_s3_action():
    A = families.s3_action(24)
    assert A.order == 6
    assert not A.law_failures()
    assert all(families.s3_relations(A).values())
    assert families.j_tilde_char3(24).coeffs.tolist() == J_TILDE_CHAR3
    assert A.fixes(families.j_tilde_char3(24))


def test_s3_action_precision_guard():
    with pytest.raises(ValueError):
        families.s3_action(5)


def test_series_action_matrix():
    A = families.s3_action(8)
    f = TruncatedSeries.from_values(F3, [1, 2, 0, 1, 0, 0, 2, 1], 8)
    for i in range(A.order):
        M = A.matrix(i)
        col = np.zeros(8, dtype=np.int64)
        for j in range(8):
            col = F3.add_table[col, F3.mul_table[M[:, j], f.coeffs[j]]]
        assert np.array_equal(col, A.act(f, i).coeffs)


def test_right_action_on_functions():
    A = families.s3_action(10)
    f = TruncatedSeries.from_values(F3, [0, 1, 1, 0, 2, 0, 0, 1, 0, 1], 10)
    G = A.group
    for s in range(G.order):
        for t in range(G.order):
            assert A.act(A.act(f, s), t) == A.act(f, G.mul(s, t))


# -- Legendre -------------------------------------------------------------------


def test_legendre_identity():
    chk = families.legendre_j_check()
    assert chk.ok
    assert chk.lhs.degree("lam") == chk.rhs.degree("lam") == 10


def test_legendre_discriminant():
    lam = MultiPoly.var("lam", F3)
    assert families.legendre_discriminant_shape()
    assert discriminant(families.legendre_curve()) == lam**4 + lam**3 + lam**2


@pytest.mark.parametrize("value", [0, 2, 3, 5, 7])
def test_legendre_spot(value):
    assert families.legendre_spot_check(GF(9).element(value)).ok


# -- Hesse ----------------------------------------------------------------------


def test_hesse_model_matches_oracle():
    model = families.hesse_curve_to_weierstrass()
    for got, text in zip(model.coefficients(), HESSE_MODEL):
        assert got == RationalFunction(parse_poly(text, F2))


def test_hesse_j():
    assert families.hesse_j_check().ok
    assert families.hesse_discriminant_shape() == 3


def test_flex_and_non_flex():
    cubic = families.hesse_cubic()
    assert families.is_flex(cubic, families.HESSE_FLEX)
    assert families.tangent_contact_order(cubic, families.HESSE_FLEX) == 3
    # on the Fermat cubic over F4 the points with a zero coordinate are flexes; a conic has none
    plain = MultiPoly.var("X", F4) ** 3 + MultiPoly.var("Y", F4) ** 3 + MultiPoly.var("Z", F4) ** 3
    conic = MultiPoly.var("X", F3) ** 2 + MultiPoly.var("Y", F3) ** 2 - MultiPoly.var("Z", F3) ** 2
    assert families.tangent_contact_order(conic, (F3(0), F3(1), F3(1))) == 2
    assert not families.is_flex(conic, (F3(0), F3(1), F3(1)))
    assert families.is_flex(plain, (F4(1), F4(1), F4(0)))


def test_torsion_points():
    rep = families.hesse_torsion_points_check()
    assert rep.ok
    assert rep.hessian_identically_zero
    assert set(rep.contact_order.values()) == {3}


def test_hessian_degenerates_mod_2():
    from picard_lab.algebra import ZZ

    over_z = families.hessian_at(families.hesse_cubic(ZZ), tuple(MultiPoly.var(n) for n in ("X", "Y", "Z")))
    assert not over_z.is_zero()
    assert all(c % 2 == 0 for c in over_z.terms.values())


def test_j_tilde_char2():
    assert families.j_tilde_char2(24).coeffs.tolist() == J_TILDE_CHAR2


# -- GL2(F3) and SL2(F3) ----------------------------------------------------------


def test_gl2_action():
    rep = families.gl2f3_action_check()
    assert rep.ok
    assert rep.order == 48
    assert rep.flag_zero_order == 24 and rep.flag_zero_is_sl2
    assert rep.diag_action == families.PointMap((1, 0, 0, 1), 1)
    assert rep.convention == "right"


def test_point_map_composition():
    w = F4.gen
    a = families.PointMap((w, 0, 0, 1), 0)
    f = families.PointMap((1, 0, 0, 1), 1)
    # flipping w first conjugates the later matrix
    assert f.then(a) == families.PointMap((w * w, 0, 0, 1), 1)
    assert a.then(f) == families.PointMap((w, 0, 0, 1), 1)


def test_sl2_series_action():
    S = families.sl2f3_series_action(24)
    assert S.order == 24
    assert not S.law_failures()
    assert S.fixes(families.j_tilde_char2(24))


def test_sl2_precision_guard():
    with pytest.raises(ValueError):
        families.sl2f3_series_action(11)


def test_z2_trivial():
    A = families.z2_trivial_action(1)
    assert A.order == 2
    f = TruncatedSeries.one(F2, 1)
    assert all(A.act(f, i) == f for i in range(2))
