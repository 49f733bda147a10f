"""Named verification suites run by the command line tool.

Each suite returns a list of :class:`Check` records.  Detail strings contain
only exact values and the seed, so structured output is reproducible.
"""
from __future__ import annotations

import random
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import autgroups, cohomology, families
from .algebra.fields import GF
from .algebra.linalg import in_span
from .algebra.poly import MultiPoly
from .algebra.series import TruncatedSeries
from .transform import (
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
    witness_matches,
)
from .weierstrass import (
    CurveClass,
    NotEllipticError,
    WeierstrassCurve,
    b_invariants,
    c4,
    classify,
    discriminant,
    j_invariant,
    reduce_mod,
    tangent_cone_discriminant,
)

SUITES = ("invariants", "transforms", "aut-characters", "char3-legendre", "char2-hesse", "cohomology")
MIN_PRECISION = {"char3-legendre": 6, "char2-hesse": 12}
GROUP_MIN_PRECISION = {"s3": 6, "sl2f3": 12, "z2-trivial": 1}


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def records(self) -> list[dict]:
        return [{"suite": self.suite, "check": c.name, "status": c.status, "detail": c.detail} for c in self.checks]


@dataclass(frozen=True)
class Options:
    precision: int = 24
    seed: int = 0
    group: str | None = None


class _Collector:
    def __init__(self):
        self.checks: list[Check] = []

    def add(self, name: str, ok, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def attempt(self, name: str, fn: Callable[[], tuple[bool, str]]) -> None:
        """Run ``fn`` and record its verdict; an exception counts as a failure."""
        try:
            ok, detail = fn()
        except Exception as exc:  # noqa: BLE001 - a crashing check is a failing check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        self.add(name, ok, detail)


def _curve(field, coeffs):
    return WeierstrassCurve.over(field, coeffs) if field is not None else WeierstrassCurve(*coeffs)


def _random_transform(rng: random.Random, F) -> Transform:
    return Transform(F.element(rng.randrange(1, F.q)), *(F.element(rng.randrange(F.q)) for _ in range(3)))


def _random_curve(rng: random.Random, F) -> WeierstrassCurve:
    return WeierstrassCurve(*(F.element(rng.randrange(F.q)) for _ in range(5)))


# ---------------------------------------------------------------------------


def suite_invariants(opts: Options) -> list[Check]:
    out = _Collector()
    m4 = WeierstrassCurve(0, 0, 0, 1, 0)
    m6 = WeierstrassCurve(0, 0, 1, 0, 0)
    out.add("discriminant(y^2=x^3+x) = -64", discriminant(m4) == -64, f"got {discriminant(m4)}")
    out.add("j(y^2=x^3+x) = 1728", j_invariant(m4) == 1728, f"got {j_invariant(m4)}")
    out.add("discriminant(y^2+y=x^3) = -27", discriminant(m6) == -27, f"got {discriminant(m6)}")
    out.add("j(y^2+y=x^3) = 0", j_invariant(m6) == 0, f"got {j_invariant(m6)}")
    out.add("b-invariants(y^2=x^3+x) = (0,2,0,-1)", b_invariants(m4) == (0, 2, 0, -1), str(b_invariants(m4)))
    out.add("b-invariants(y^2+y=x^3) = (0,0,1,0)", b_invariants(m6) == (0, 0, 1, 0), str(b_invariants(m6)))
    out.add("c4(y^2=x^3+x) = -48", c4(m4) == -48, f"got {c4(m4)}")
    out.add("discriminant(y^2=x^3) = 0", discriminant(WeierstrassCurve(0, 0, 0, 0, 0)) == 0)
    q1 = WeierstrassCurve(*(Fraction(x) for x in (0, 0, 0, 0, 1)))
    out.add("j(y^2=x^3+1) over Q = 0", j_invariant(q1) == 0, f"got {j_invariant(q1)}")

    g = WeierstrassCurve.generic()
    b2, b4, b6, b8 = b_invariants(g)
    out.add("4*b8 = b2*b6 - b4^2 (generic)", 4 * b8 == b2 * b6 - b4 * b4)
    g2 = WeierstrassCurve.generic(GF(2))
    a1 = MultiPoly.var("a1", GF(2))
    out.add("c4 = a1^4 in characteristic 2", c4(g2) == a1**4, f"got {c4(g2)}")
    g3 = WeierstrassCurve.generic(GF(3))
    a1, a2 = MultiPoly.var("a1", GF(3)), MultiPoly.var("a2", GF(3))
    holds = c4(g3) == (a1 * a1 + a2) ** 2
    other = c4(g3) == (a1 + a2) ** 2
    out.add(
        "c4 = (a1^2+a2)^2 in characteristic 3",
        holds,
        f"(a1^2+a2)^2 {'holds' if holds else 'fails'}; (a1+a2)^2 {'holds' if other else 'fails'}",
    )

    F5 = GF(5)
    out.add("y^2=x^3+x over F5 is smooth", classify(_curve(F5, (0, 0, 0, 1, 0))) is CurveClass.SMOOTH)
    nodal = WeierstrassCurve(0, 1, 0, 0, 0)
    tc = tangent_cone_discriminant(nodal.map(Fraction), (Fraction(0), Fraction(0)))
    out.add("y^2=x^3+x^2 over Q is nodal", classify(nodal) is CurveClass.NODAL and c4(nodal) == 16, f"c4={c4(nodal)}")
    out.add("node at (0,0) has two tangent directions", tc != 0, f"tangent cone discriminant {tc}")
    out.add("y^2=x^3 over Q is cuspidal", classify(WeierstrassCurve(0, 0, 0, 0, 0)) is CurveClass.CUSPIDAL)

    rng = random.Random(opts.seed)
    bad = 0
    trials = 200
    for _ in range(trials):
        c = WeierstrassCurve(*(rng.randint(-50, 50) for _ in range(5)))
        for q in (2, 3, 5, 7, 13):
            F = GF(q)
            r = reduce_mod(c, F)
            bad += discriminant(r) != F(discriminant(c)) or c4(r) != F(c4(c))
    out.add(
        "reduction mod p commutes with discriminant and c4",
        bad == 0,
        f"{trials} random curves x p in (2,3,5,7,13), seed={opts.seed}, mismatches={bad}",
    )
    return out.checks


def _table_group_axioms(elements: list[Transform], F) -> tuple[bool, str]:
    pos = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            k = pos.get(compose(a, b))
            if k is None:
                return False, "product left the group"
            table[i, j] = k
    idx = np.arange(n)
    assoc = np.array_equal(table[table[:, :, None], idx[None, None, :]], table[idx[:, None, None], table[None, :, :]])
    e = pos[Transform.identity(F)]
    ident = np.array_equal(table[e], idx) and np.array_equal(table[:, e], idx)
    inv = all(table[i, pos[invert(g)]] == e and table[pos[invert(g)], i] == e for i, g in enumerate(elements))
    return assoc and ident and inv, f"|G|={n}, {n**3} triples"


def suite_transforms(opts: Options) -> list[Check]:
    out = _Collector()
    d, k = covariance_identities()
    out.add("Delta' = u^12 Delta (generic)", d.is_zero(), f"residual terms: {len(d.terms)}")
    out.add("c4' = u^4 c4 (generic)", k.is_zero(), f"residual terms: {len(k.terms)}")
    c = WeierstrassCurve.generic()
    new = WeierstrassCurve(*coefficient_formulas())
    out.add("j' = j (generic, cross-multiplied)", (c4(new) ** 3 * discriminant(c) - c4(c) ** 3 * discriminant(new)).reduce_uv().is_zero())

    u, r, s, t = (MultiPoly.var(n) for n in ("u", "r", "s", "t"))
    v = MultiPoly.var("v")
    fac = differential_factor(Transform(u, r, s, t))
    out.add("invariant differential scales by u^-1 (generic)", fac == v, f"factor {fac}")
    fac1 = differential_factor(Transform(1, r, s, t))
    out.add("(1,r,s,t) fixes the invariant differential", fac1 == 1, f"factor {fac1}")
    out.add("Delta pi^12 is invariant", (u**12 * fac**12).reduce_uv() == 1)

    zero = MultiPoly.const(0)
    one = MultiPoly.const(1)
    lhs = compose(compose(Transform(one, r, zero, zero), Transform(one, zero, s, zero)), Transform(one, zero, zero, t - r * s))
    out.add("(1,r,0,0)(1,0,s,0)(1,0,0,t-rs) = (1,r,s,t)", lhs == Transform(one, r, s, t), str(lhs))

    rng = random.Random(opts.seed)
    F7, F13 = GF(7), GF(13)
    n_assoc = 1000
    ok = all(
        compose(compose(a, b), c_) == compose(a, compose(b, c_))
        for a, b, c_ in ((_random_transform(rng, F7), _random_transform(rng, F7), _random_transform(rng, F7)) for _ in range(n_assoc))
    )
    out.add("associativity over F7", ok, f"{n_assoc} random triples, seed={opts.seed}")
    e13 = Transform.identity(F13)
    ok = True
    for _ in range(100):
        g = _random_transform(rng, F13)
        h = invert(g)
        ok &= compose(g, h) == e13 and compose(h, g) == e13 and compose(e13, g) == g and compose(g, e13) == g
    out.add("inverses and identity over F13", ok, f"100 random elements, seed={opts.seed}")
    for q in (2, 3):
        F = GF(q)
        elements = [Transform(a, b, c_, d_) for a in F.units() for b in F.elements() for c_ in F.elements() for d_ in F.elements()]
        out.attempt(f"group axioms on all of G(F{q})", lambda el=elements, F=F: _table_group_axioms(el, F))

    n_act = 200
    ok = True
    for _ in range(n_act):
        cv = _random_curve(rng, F7)
        g, h = _random_transform(rng, F7), _random_transform(rng, F7)
        ok &= apply_transform(apply_transform(cv, g), h) == apply_transform(cv, compose(g, h))
    out.add(
        "right action: acting by g then h equals compose(g, h)",
        ok,
        f"{n_act} random curve/transform triples over F7, seed={opts.seed}",
    )
    ok = all(apply_transform(cv, Transform.identity(F7)) == cv for cv in (_random_curve(rng, F7) for _ in range(20)))
    out.add("identity transform fixes curves", ok)

    for q in (2, 3, 7):
        rep = kernel_generation_check(GF(q))
        out.add(f"kernel of chi_0 over F{q} generated by r, s, t images", rep.ok, f"reached {rep.reached} of {rep.expected}")

    ok = True
    for e in range(-36, 37):
        res = character_trivializable(Character(e))
        ok &= res.trivial == (e % 12 == 0)
        if res.trivial:
            ok &= res.m * 12 == e
            ok &= witness_matches(Character(e), Transform(u, r, s, t), res)
            ok &= all(witness_matches(Character(e), _random_transform(rng, F13), res) for _ in range(5))
    out.add("chi_0^e trivializable iff 12 divides e", ok, f"e in [-36, 36], seed={opts.seed}")
    res = character_trivializable(Character(12))
    out.add("chi_0^12 has witness exponent m = 1", res.trivial and res.m == 1, f"m={res.m}")
    out.add("chi_0^1 is not trivializable", not character_trivializable(Character(1)).trivial)
    w = act_on_unit(Transform(u, zero, zero, zero), UnitOnU(1, 1))
    out.add("(u,0,0,0) acts on Delta by u^12", w == UnitOnU(u**12, 1), f"got beta={w.beta}, m={w.m}")
    ok = True
    for _ in range(100):
        g, h = _random_transform(rng, F13), _random_transform(rng, F13)
        wv = UnitOnU(F13.element(rng.randrange(1, 13)), rng.randrange(-3, 4))
        ok &= act_on_unit(h, act_on_unit(g, wv)) == act_on_unit(compose(g, h), wv)
        ok &= act_on_unit(g, UnitOnU(wv.beta, 0)) == UnitOnU(wv.beta, 0)
    out.add("action on units is compatible with composition", ok, f"100 random pairs over F13, seed={opts.seed}")
    return out.checks


def suite_aut_characters(opts: Options) -> list[Check]:
    out = _Collector()
    F13, F7 = GF(13), GF(7)
    A4 = autgroups.enumerate_automorphisms(autgroups.mu4_curve(F13))
    A6 = autgroups.enumerate_automorphisms(autgroups.mu6_curve(F7))
    A2 = autgroups.enumerate_automorphisms(_curve(F13, (0, 0, 0, 1, 1)))
    out.add("Aut(y^2=x^3+x over F13) is cyclic of order 4", A4.order == 4 and A4.is_cyclic(), f"order {A4.order}")
    out.add("Aut(y^2+y=x^3 over F7) is cyclic of order 6", A6.order == 6 and A6.is_cyclic(), f"order {A6.order}")
    out.add("Aut(y^2=x^3+x+1 over F13) has order 2", A2.order == 2, f"order {A2.order}")
    out.add(
        "every automorphism fixes its curve under substitution",
        all(autgroups.verify_fixes_curve(A) for A in (A4, A6, A2)),
    )
    out.add("group orders divide 24", all(24 % A.order == 0 for A in (A4, A6, A2)))
    g4 = autgroups.normalized_generator(A4)
    g6 = autgroups.normalized_generator(A6)
    e4 = autgroups.differential_character(A4, g4)
    e6 = autgroups.differential_character(A6, g6)
    out.add("mu_4 differential exponent = 1", e4 == 1, f"generator {g4.element}, zeta={g4.root}, e={e4}")
    out.add("mu_6 differential exponent = 1", e6 == 1, f"generator {g6.element}, zeta={g6.root}, e={e6}")
    e2 = autgroups.differential_character(A2)
    out.add("mu_2 differential exponent = 1", e2 == 1, f"e={e2}")
    flip, rot = autgroups.mu6_factor_elements(A6)
    out.add(
        "mu_6 contains (x,y)->(x,-y-1) and (x,y)->(zeta x,y)",
        flip is not None and rot is not None,
        f"{flip}, {rot}",
    )
    pairs = {}
    ok = True
    for i in range(24):
        try:
            p = autgroups.chi_pair(i, e4, e6)
            pairs[i] = p.to_z12()
        except autgroups.InvariantViolation:
            ok = False
    out.add("chi_4 = chi_6 mod 2 for i in 0..23", ok and len(pairs) == 24)
    out.add("chi_pair(1) = 1 in Z/12", pairs.get(1) == 1, f"{autgroups.chi_pair(1, e4, e6)}")
    out.add("chi_pair(6) = 6 and chi_pair(12) = 0", pairs.get(6) == 6 and pairs.get(12) == 0)
    hom = all(pairs[(i + j) % 24] == (pairs[i] + pairs[j]) % 12 for i in range(24) for j in range(24))
    out.add("i -> chi_pair(i) is a homomorphism onto Z/12", hom and set(pairs.values()) == set(range(12)))

    def singular():
        try:
            autgroups.enumerate_automorphisms(_curve(F13, (0, 0, 0, 0, 0)))
        except NotEllipticError:
            return True, "rejected"
        return False, "accepted a singular curve"

    out.attempt("singular curves are rejected", singular)
    return out.checks


def suite_char3_legendre(opts: Options) -> list[Check]:
    out = _Collector()
    N = opts.precision
    F3 = GF(3)
    out.add("Delta is a unit times lam^2 (lam-1)^2", families.legendre_discriminant_shape())
    chk = families.legendre_j_check()
    out.add("c4^3 (mu^2-1)^2 = mu^6 Delta in F3[lam]", chk.ok, chk.detail)
    spot = families.legendre_spot_check()
    out.add("identity at lam = 2 in F9", spot.ok, f"{spot.lhs} = {spot.rhs}")
    at = lambda lam: WeierstrassCurve.over(F3, (0, -(lam + 1), 0, lam, 0))  # noqa: E731
    out.add("j = 0 at mu = 0", j_invariant(at(-1)).is_zero())
    out.add("Delta = 0 at lam = 0", discriminant(at(0)).is_zero())
    A = families.s3_action(N)
    out.add("S3 action has order 6", A.order == 6, f"N={N}")
    rel = families.s3_relations(A)
    out.add("alpha^2, beta^3, (alpha beta)^2 act trivially", all(rel.values()), ", ".join(f"{k}: {v}" for k, v in rel.items()))
    a, b = A.group.generator_indices
    out.add("j is fixed by alpha and beta", A.fixes(families.j_tilde_char3(N), (a, b)), f"N={N}")
    out.add("action law on all pairs", not A.law_failures(), f"{A.order**2} pairs")
    r = cohomology.elimination_check_char3()
    out.add(
        "mu^6 congruences force a1..a5 = 0",
        r.ok,
        f"linear dim {r.dimension}, brute force {r.brute_force_solutions} of {r.candidates_tested}",
    )
    A6 = families.s3_action(6)
    g = TruncatedSeries.mu(F3, 6)
    out.add("g = mu fails the alpha congruence", not (A6.act(g, a) - g).is_zero(), str(A6.act(g, a) - g))
    return out.checks


def suite_char2_hesse(opts: Options) -> list[Check]:
    out = _Collector()
    N = opts.precision
    cubic = families.hesse_cubic()
    out.add("[1:1:0] is a flex of the Hesse cubic", families.is_flex(cubic, families.HESSE_FLEX))
    out.attempt("j = mu^12/(mu^3-1)^3 for the Weierstrass model", lambda: (families.hesse_j_check().ok, ""))
    k = families.hesse_discriminant_shape()
    out.add("Delta of the model is a power of (mu^3-1)", k is not None, f"exponent {k}")
    tp = families.hesse_torsion_points_check()
    out.add("3-torsion points lie on the cubic", all(tp.on_curve.values()), str(tp.on_curve))
    out.add("3-torsion points are flexes", all(v >= 3 for v in tp.contact_order.values()), f"contact orders {tp.contact_order}")
    out.add("Hessian vanishes identically in characteristic 2", tp.hessian_identically_zero, "flexes are detected by tangent contact")

    gl = families.gl2f3_action_check()
    out.add("GL2(F3) closure has 48 elements", gl.order == 48, f"order {gl.order}")
    out.add(
        "GL2(F3) action law on all pairs",
        not gl.right_failures,
        f"{gl.order**2} pairs, failures {len(gl.right_failures)}; opposite order failures {len(gl.left_failures)}",
    )
    out.add("diag(1,-1) acts by (mu, w^2)", gl.diag_action == families.PointMap((1, 0, 0, 1), 1), str(gl.diag_action))
    out.add("w-fixing subgroup is SL2(F3) of order 24", gl.flag_zero_order == 24 and gl.flag_zero_is_sl2)

    S = families.sl2f3_series_action(N)
    a, b = S.group.generator_indices
    mu = TruncatedSeries.mu(families.F4, N)
    out.add("SL2(F3) series action has 24 elements", S.order == 24)
    out.add("SL2(F3) action law on all pairs", not S.law_failures(), f"{S.order**2} pairs at N={N}")
    out.add("beta^2 acts trivially", S.substitutions[S.group.power(b, 2)] == mu)
    out.add("alpha^3 acts trivially", S.substitutions[S.group.power(a, 3)] == mu)
    out.add("j is fixed by alpha and beta", S.fixes(families.j_tilde_char2(N), (a, b)), f"N={N}")

    r = cohomology.elimination_check_char2()
    out.add("alpha-invariants in degrees 1..11 are spanned by mu^3, mu^6, mu^9", r.alpha_only_basis.shape[0] == 3)
    out.add(
        "mu^12 congruences force a1..a11 = 0",
        r.ok,
        f"linear dim {r.dimension}, brute force {r.brute_force_solutions} of {r.candidates_tested}",
    )
    out.add(
        "beta eliminates a3, a6, a9 in turn",
        [x[1] for x in r.chain] == ["a3", "a6", "a9"],
        ", ".join(f"mu^{d} -> {n}" for d, n in r.chain),
    )
    x = cohomology.xi_beta2_analysis(N, S)
    out.add(
        "xi_{beta^2} is invariant with valuation >= 2",
        x.ok,
        f"{x.basis_size} basis cocycles at N={N}, min valuation {min(x.valuations, default=N)}",
    )
    return out.checks


def _cohomology_group_checks(out: _Collector, name: str, N: int, seed: int) -> None:
    A = cohomology.named_action(name, N)
    rep = cohomology.h1(A)
    out.add(f"{name}: dimensions at N={N}", rep.dim_h1 >= 0, f"Z1={rep.dim_z1} B1={rep.dim_b1} H1={rep.dim_h1}")
    bad = [k for k, vec in enumerate(rep.z1) if not cohomology.Cocycle.from_vector(A, vec).is_cocycle()]
    out.add(f"{name}: Z1 basis satisfies every pair equation", not bad, f"{rep.dim_z1} cocycles x {A.order**2} pairs")
    out.add(f"{name}: B1 is inside Z1", all(in_span(A.field, rep.z1, v) for v in rep.b1))
    fixed = cohomology.fixed_subspace(A).shape[0]
    out.add(f"{name}: dim B1 = N - dim fixed", rep.dim_b1 == N - fixed, f"fixed dim {fixed}")
    perm = list(range(A.order))
    random.Random(seed).shuffle(perm)
    P = A.permuted(perm)
    same = np.array_equal(cohomology.canonical_z1(P), cohomology.canonical_z1(A)) and cohomology.h1(P).dim_h1 == rep.dim_h1
    out.add(f"{name}: H1 ignores element order", same, f"shuffled with seed={seed}")
    if name == "sl2f3":
        out.add(f"{name}: dim H1 > 0", rep.dim_h1 > 0, f"dim H1 = {rep.dim_h1}")
    if name == "z2-trivial":
        out.add(f"{name}: dim H1 = dim Hom(Z/2, A)", rep.dim_h1 == N, f"A = F2^{N}")


def suite_cohomology(opts: Options) -> list[Check]:
    out = _Collector()
    groups = (opts.group,) if opts.group else cohomology.GROUPS
    for name in groups:
        _cohomology_group_checks(out, name, opts.precision, opts.seed)
    shard = cohomology.h1(families.z2_trivial_action(1))
    out.add("Z/2 acting trivially on F2: dim H1 = 1", shard.dim_h1 == 1, f"Z1={shard.dim_z1} B1={shard.dim_b1}")
    triv = cohomology.h1(cohomology.trivial_group_action())
    out.add("trivial group: dim H1 = 0", triv.dim_z1 == 0 and triv.dim_h1 == 0)
    return out.checks


RUNNERS = {
    "invariants": suite_invariants,
    "transforms": suite_transforms,
    "aut-characters": suite_aut_characters,
    "char3-legendre": suite_char3_legendre,
    "char2-hesse": suite_char2_hesse,
    "cohomology": suite_cohomology,
}


def validate(suite: str, opts: Options) -> str | None:
    """Usage problem with the requested run, or None."""
    if suite != "all" and suite not in RUNNERS:
        return f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}"
    if opts.precision < 1:
        return "precision must be positive"
    if opts.group is not None and opts.group not in GROUP_MIN_PRECISION:
        return f"unknown group {opts.group!r}; choose from {', '.join(cohomology.GROUPS)}"
    names = SUITES if suite == "all" else (suite,)
    need = 0
    for name in names:
        if name == "cohomology":
            groups = (opts.group,) if opts.group else cohomology.GROUPS
            need = max(need, *(GROUP_MIN_PRECISION[g] for g in groups))
        else:
            need = max(need, MIN_PRECISION.get(name, 0))
    if opts.precision < need:
        return f"precision N={opts.precision} is below the elimination window for {suite} (need N >= {need})"
    return None


def run(suite: str, opts: Options | None = None) -> list[SuiteResult]:
    opts = opts or Options()
    problem = validate(suite, opts)
    if problem:
        raise ValueError(problem)
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        start = time.perf_counter()
        checks = _run_guarded(name, opts)
        results.append(SuiteResult(name, checks, time.perf_counter() - start))
    return results


def _run_guarded(name: str, opts: Options) -> list[Check]:
    try:
        return RUNNERS[name](opts)
    except Exception as exc:  # noqa: BLE001 - report instead of crashing the whole run
        return [Check("suite completed", False, f"{type(exc).__name__}: {exc}")]


__all__ = ["Check", "Options", "SuiteResult", "SUITES", "run", "validate"]
