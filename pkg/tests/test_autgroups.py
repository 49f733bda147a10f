import pytest

from picard_lab import autgroups
from picard_lab.algebra import GF
from picard_lab.transform import Transform, apply_transform
from picard_lab.weierstrass import NotEllipticError, WeierstrassCurve

F4, F7, F9, F13 = GF(4), GF(7), GF(9), GF(13)


@pytest.fixture(scope="module")
def mu4():
    return autgroups.enumerate_automorphisms(autgroups.mu4_curve(F13))


@pytest.fixture(scope="module")
def mu6():
    return autgroups.enumerate_automorphisms(autgroups.mu6_curve(F7))


def brute_force(curve):
    F = curve.ring
    return sorted(
        (u.code, r.code, s.code, t.code)
        for u in F.units()
        for r in F.elements()
        for s in F.elements()
        for t in F.elements()
        if apply_transform(curve, Transform(u, r, s, t)) == curve
    )


@pytest.mark.parametrize(
    "field,coeffs",
    [(GF(5), (0, 0, 0, 1, 0)), (GF(7), (0, 0, 1, 0, 0)), (GF(3), (0, 1, 0, 0, 1)), (GF(4), (0, 0, 1, 0, 0))],
)
def test_scan_matches_brute_force(field, coeffs):
    c = WeierstrassCurve.over(field, coeffs)
    assert autgroups.scan_fixing_transforms(c) == brute_force(c)


@pytest.mark.parametrize(
    "field,coeffs,order",
    [
        (F13, (0, 0, 0, 1, 0), 4),
        (F7, (0, 0, 1, 0, 0), 6),
        (F13, (0, 0, 0, 1, 1), 2),
        (F4, (0, 0, 1, 0, 0), 24),
        (F9, (0, 0, 0, 1, 0), 12),
    ],
)
def test_orders(field, coeffs, order):
    A = autgroups.enumerate_automorphisms(WeierstrassCurve.over(field, coeffs))
    assert A.order == order
    assert autgroups.verify_fixes_curve(A)


def test_cyclic(mu4, mu6):
    assert mu4.is_cyclic() and mu6.is_cyclic()
    supersingular = autgroups.enumerate_automorphisms(WeierstrassCurve.over(F4, (0, 0, 1, 0, 0)))
    assert not supersingular.is_cyclic()


def test_table_is_a_group(mu6):
    n = mu6.order
    T = mu6.table
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert T[T[i, j], k] == T[i, T[j, k]]


def test_normalized_generators(mu4, mu6):
    g4 = autgroups.normalized_generator(mu4)
    assert g4.element == Transform.over(F13, (8, 0, 0, 0))
    assert g4.root == F13(5)
    g6 = autgroups.normalized_generator(mu6)
    assert g6.element == Transform.over(F7, (3, 0, 0, 6))
    assert g6.root == F7(5)
    assert mu6.element_order(g6.element) == 6


def test_mu6_factors(mu6):
    flip, rot = autgroups.mu6_factor_elements(mu6)
    assert flip == Transform.over(F7, (6, 0, 0, 6))
    assert rot == Transform.over(F7, (4, 0, 0, 0))


def test_differential_exponents(mu4, mu6):
    assert autgroups.differential_character(mu4) == 1
    assert autgroups.differential_character(mu6) == 1
    mu2 = autgroups.enumerate_automorphisms(WeierstrassCurve.over(F13, (0, 0, 0, 1, 1)))
    assert autgroups.differential_character(mu2) == 1


def test_non_cyclic_rejected():
    A = autgroups.enumerate_automorphisms(WeierstrassCurve.over(F4, (0, 0, 1, 0, 0)))
    with pytest.raises(autgroups.UnsupportedGroup):
        autgroups.normalized_generator(A)


def test_chi_pairs():
    assert autgroups.chi_pair(1).to_z12() == 1
    assert (autgroups.chi_pair(12).chi4, autgroups.chi_pair(12).chi6) == (0, 0)
    p6 = autgroups.chi_pair(6)
    assert (p6.chi4, p6.chi6) == (2, 0) and p6.to_z12() == 6
    for i in range(24):
        assert autgroups.chi_pair(i).compatible()
        assert autgroups.chi_pair(i).to_z12() == i % 12


def test_incompatible_pair():
    with pytest.raises(autgroups.InvariantViolation):
        autgroups.ChiPair(1, 0).to_z12()
    with pytest.raises(autgroups.InvariantViolation):
        autgroups.chi_pair(1, e4=3)


def test_singular_rejected():
    with pytest.raises(NotEllipticError):
        autgroups.enumerate_automorphisms(WeierstrassCurve.over(F13, (0, 0, 0, 0, 0)))


def test_needs_finite_field():
    with pytest.raises(TypeError):
        autgroups.enumerate_automorphisms(WeierstrassCurve(0, 0, 0, 1, 0))
