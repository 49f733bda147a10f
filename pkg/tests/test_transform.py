import random

import pytest

from picard_lab.algebra import GF, MultiPoly, parse_poly
from picard_lab.transform import (
    Character,
    Transform,
    UnitOnU,
    act_on_unit,
    apply_transform,
    character_trivializable,
    coefficient_formulas,
    compose,
    covariance_identities,
    differential_factor,
    invert,
    kernel_generation_check,
    parse_transform,
    unit_inverse,
    witness_matches,
)
from picard_lab.weierstrass import WeierstrassCurve, c4, discriminant, j_invariant

# frozen from an independent sympy computation of the substitution
ORACLE_FORMULAS = (
    "a1*u - 2*s",
    "a1*u*s + a2*u^2 - 3*r - s^2",
    "-a1*u*r + a3*u^3 + 2*r*s - 2*t",
    "-2*a1*u*r*s + a1*u*t - 2*a2*u^2*r + a3*u^3*s + a4*u^4 + 3*r^2 + 2*r*s^2 - 2*s*t",
    "a1*u*r^2*s - a1*u*r*t + a2*u^2*r^2 - a3*u^3*r*s + a3*u^3*t - a4*u^4*r + a6*u^6 - r^3 - r^2*s^2 + 2*r*s*t - t^2",
)

F7, F13 = GF(7), GF(13)


def rand_transform(rng, F):
    return Transform(F.element(rng.randrange(1, F.q)), *(F.element(rng.randrange(F.q)) for _ in range(3)))


def rand_curve(rng, F):
    return WeierstrassCurve(*(F.element(rng.randrange(F.q)) for _ in range(5)))


def test_formulas_match_oracle():
    assert coefficient_formulas() == tuple(parse_poly(f) for f in ORACLE_FORMULAS)


def test_generic_apply_matches_formulas():
    new = apply_transform(WeierstrassCurve.generic(), Transform.generic())
    assert new.coefficients() == coefficient_formulas()


def test_covariance():
    d, k = covariance_identities()
    assert d.is_zero() and k.is_zero()


def test_j_invariant_preserved():
    c = WeierstrassCurve.generic()
    new = WeierstrassCurve(*coefficient_formulas())
    assert (c4(new) ** 3 * discriminant(c) - c4(c) ** 3 * discriminant(new)).reduce_uv().is_zero()


def test_differential_factor():
    u, r, s, t, v = (MultiPoly.var(n) for n in ("u", "r", "s", "t", "v"))
    assert differential_factor(Transform(u, r, s, t)) == v
    assert differential_factor(Transform(1, r, s, t)) == 1
    assert differential_factor(Transform(u, 0, 0, 0)) == v


def test_differential_factor_numeric():
    rng = random.Random(1)
    for _ in range(30):
        g = rand_transform(rng, F13)
        assert differential_factor(g, rand_curve(rng, F13)) == g.u.inverse()


def test_decomposition():
    r, s, t = (MultiPoly.var(n) for n in "rst")
    one, zero = MultiPoly.const(1), MultiPoly.const(0)
    lhs = compose(compose(Transform(one, r, zero, zero), Transform(one, zero, s, zero)), Transform(one, zero, zero, t - r * s))
    assert lhs == Transform(one, r, s, t)


def test_associativity_seeded():
    rng = random.Random(0)
    for _ in range(1000):
        a, b, c = (rand_transform(rng, F7) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_inverse_symbolic():
    g = Transform.generic()
    e = compose(g, invert(g))
    assert e == Transform(*(MultiPoly.const(x) for x in (1, 0, 0, 0)))
    assert compose(invert(g), g) == e


def test_right_action_law():
    # acting by g and then by h is acting by compose(g, h)
    rng = random.Random(5)
    for _ in range(200):
        c = rand_curve(rng, F7)
        g, h = rand_transform(rng, F7), rand_transform(rng, F7)
        assert apply_transform(apply_transform(c, g), h) == apply_transform(c, compose(g, h))


def test_right_action_law_symbolic():
    u, r, s, t = (MultiPoly.var(n) for n in ("u", "r", "s", "t"))
    g = Transform(u, r, MultiPoly.const(0), MultiPoly.const(0))
    h = Transform(MultiPoly.const(1), MultiPoly.const(0), s, t)
    c = WeierstrassCurve.generic()
    assert apply_transform(apply_transform(c, g), h) == apply_transform(c, compose(g, h))


def test_action_preserves_j():
    rng = random.Random(9)
    checked = 0
    for _ in range(100):
        c = rand_curve(rng, F13)
        if discriminant(c).is_zero():
            continue
        assert j_invariant(apply_transform(c, rand_transform(rng, F13))) == j_invariant(c)
        checked += 1
    assert checked > 50


@pytest.mark.parametrize("q", [2, 3, 7])
def test_kernel_generation(q):
    rep = kernel_generation_check(GF(q))
    assert rep.reached == q**3 == rep.expected
    assert rep.decomposition_ok


def test_character_triviality():
    for e in range(-48, 49):
        res = character_trivializable(Character(e))
        assert res.trivial == (e % 12 == 0)
        if res.trivial:
            assert 12 * res.m == e
            assert witness_matches(Character(e), Transform.generic(), res)
    assert character_trivializable(Character(0)).m == 0
    assert character_trivializable(Character(12)).m == 1


def test_act_on_unit():
    u = MultiPoly.var("u")
    zero = MultiPoly.const(0)
    assert act_on_unit(Transform(u, zero, zero, zero), UnitOnU(1, 1)) == UnitOnU(u**12, 1)
    g = Transform.generic()
    assert act_on_unit(g, UnitOnU(5, 0)) == UnitOnU(5, 0)


def test_unit_inverse():
    assert unit_inverse(-1) == -1
    assert unit_inverse(parse_poly("-u^2")) == parse_poly("-v^2")
    for bad in (2, parse_poly("3*u^2")):
        with pytest.raises(ValueError):
            unit_inverse(bad)
    with pytest.raises(ValueError):
        unit_inverse(parse_poly("u + 1"))
    assert unit_inverse(parse_poly("u^2*v^5")) == parse_poly("u^3")


def test_parse_transform():
    assert parse_transform("2,1,0,3@F7") == Transform.over(F7, (2, 1, 0, 3))
    assert parse_transform("-1,0,0,0@Z") == Transform(-1, 0, 0, 0)
    assert parse_transform("u,r,s,t@sym") == Transform.generic()
    for bad in ("0,0,0,0@F7", "2,0,0,0@Z", "u+1,0,0,0@sym", "1,0,0@F7"):
        with pytest.raises(ValueError):
            parse_transform(bad)
