"""Legendre (char 3) and Hesse (char 2) families with their finite symmetry groups.

Groups act on ``F[mu]/mu^N`` on the right: an element ``s`` carries a
substitution series ``phi_s`` and ``f^s = f(phi_s)``.  The law
``f^(st) = (f^s)^t`` is equivalent to ``phi_st = phi_s(phi_t)``, which is what
every consistency check below tests.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Sequence
from dataclasses import dataclass, field

import numpy as np

from .algebra.fields import GF, FieldElement, FiniteField
from .algebra.poly import MultiPoly, RationalFunction, poly_substitute
from .algebra.series import (
    SeriesError,
    TruncatedSeries,
    compositional_inverse,
    series_invert,
    series_substitute,
)
from .weierstrass import WeierstrassCurve, c4, discriminant, j_invariant


class ConstructionError(RuntimeError):
    """A group or action failed one of its defining checks."""


# ---------------------------------------------------------------------------
# finite groups


@dataclass(frozen=True)
class FiniteGroup:
    elements: tuple[Hashable, ...]
    table: np.ndarray
    identity: int
    inverses: np.ndarray
    words: tuple[tuple[int, ...], ...]  # generator indices, shortest first found by BFS
    generator_indices: tuple[int, ...]
    labels: tuple[str, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        return self.elements.index(element)

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def power(self, i: int, n: int) -> int:
        out = self.identity
        for _ in range(n):
            out = self.mul(out, i)
        return out

    def check_axioms(self) -> bool:
        t = self.table
        n = self.order
        idx = np.arange(n)
        assoc = np.array_equal(t[t[:, :, None], idx[None, None, :]], t[idx[:, None, None], t[None, :, :]])
        ident = np.array_equal(t[self.identity], idx) and np.array_equal(t[:, self.identity], idx)
        inv = np.all(t[idx, self.inverses] == self.identity) and np.all(t[self.inverses, idx] == self.identity)
        return bool(assoc and ident and inv)

    def permuted(self, perm: Sequence[int]) -> FiniteGroup:
        """Same group with elements listed in the order ``perm`` (new position -> old index)."""
        perm = np.asarray(perm, dtype=np.int64)
        old_to_new = np.empty_like(perm)
        old_to_new[perm] = np.arange(len(perm))
        table = old_to_new[self.table[np.ix_(perm, perm)]]
        return FiniteGroup(
            elements=tuple(self.elements[i] for i in perm),
            table=table,
            identity=int(old_to_new[self.identity]),
            inverses=old_to_new[self.inverses[perm]],
            words=tuple(self.words[i] for i in perm),
            generator_indices=tuple(int(old_to_new[g]) for g in self.generator_indices),
            labels=tuple(self.labels[i] for i in perm) if self.labels else (),
        )


def generate_group(
    generators: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
    label: Callable[[Hashable], str] = str,
    limit: int = 10_000,
) -> FiniteGroup:
    """Close ``generators`` under ``mul`` by breadth-first search on right multiplication."""
    elements = [identity]
    words: list[tuple[int, ...]] = [()]
    pos = {identity: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for k, g in enumerate(generators):
            h = mul(elements[i], g)
            if h not in pos:
                pos[h] = len(elements)
                elements.append(h)
                words.append(words[i] + (k,))
                queue.append(pos[h])
                if len(elements) > limit:
                    raise ConstructionError("group closure exceeded the size limit")
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = pos[mul(a, b)]
    inverses = np.array([int(np.flatnonzero(table[i] == 0)[0]) for i in range(n)], dtype=np.int64)
    return FiniteGroup(
        elements=tuple(elements),
        table=table,
        identity=0,
        inverses=inverses,
        words=tuple(words),
        generator_indices=tuple(pos[g] for g in generators),
        labels=tuple(label(e) for e in elements),
    )


def _mat_mul(p: int):
    def mul(a, b):
        return (
            ((a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
             (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p)
        )
    return mul


def _mat_label(m) -> str:
    return f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]]"


def _projective(m, p: int):
    """Scale a 2x2 matrix over F_p so its first nonzero entry is 1."""
    lead = next(x for x in m if x % p)
    inv = pow(lead, -1, p)
    return tuple((x * inv) % p for x in m)


def gl2f3() -> FiniteGroup:
    """GL2(F3) generated by [[1,0],[-1,1]], [[0,-1],[1,0]], [[1,0],[0,-1]]."""
    gens = [(1, 0, 2, 1), (0, 2, 1, 0), (1, 0, 0, 2)]
    return generate_group(gens, _mat_mul(3), (1, 0, 0, 1), _mat_label)


def sl2f3() -> FiniteGroup:
    """SL2(F3) generated by alpha = [[1,0],[-1,1]] and beta = [[0,-1],[1,0]]."""
    return generate_group([(1, 0, 2, 1), (0, 2, 1, 0)], _mat_mul(3), (1, 0, 0, 1), _mat_label)


def s3_mobius() -> FiniteGroup:
    """The subgroup of PGL2(F3) generated by mu -> -mu and mu -> mu/(1-mu)."""
    base = _mat_mul(3)

    def mul(a, b):
        return _projective(base(a, b), 3)

    gens = [_projective((2, 0, 0, 1), 3), _projective((1, 0, 2, 1), 3)]
    return generate_group(gens, mul, (1, 0, 0, 1), _mat_label)


def cyclic_group(n: int) -> FiniteGroup:
    return generate_group([1 % n], lambda a, b: (a + b) % n, 0, lambda a: f"g^{a}")


def det3(m) -> int:
    return (m[0] * m[3] - m[1] * m[2]) % 3


# ---------------------------------------------------------------------------
# series actions


def mobius_series(field: FiniteField, matrix, precision: int) -> TruncatedSeries:
    """``(a mu + b) / (c mu + d)`` as a series; needs ``b = 0`` and ``a, d`` nonzero."""
    a, b, c, d = (field(x) for x in matrix)
    if not b.is_zero() or a.is_zero() or d.is_zero():
        raise SeriesError("Mobius map must fix 0 with nonzero derivative")
    num = TruncatedSeries.monomial(field, 1, precision, a)
    den = TruncatedSeries.from_values(field, [d, c], precision)
    return num * series_invert(den)


@dataclass(frozen=True)
class SeriesAction:
    group: FiniteGroup
    field: FiniteField
    precision: int
    substitutions: tuple[TruncatedSeries, ...]
    _matrices: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def order(self) -> int:
        return self.group.order

    def act(self, f: TruncatedSeries, i: int) -> TruncatedSeries:
        """``f^s`` for the element with index ``i``."""
        if self.precision == 1:
            return f
        return series_substitute(f, self.substitutions[i])

    def matrix(self, i: int) -> np.ndarray:
        """Codes of the linear map ``f -> f^s``: column ``j`` holds ``phi_s^j``."""
        if i not in self._matrices:
            N = self.precision
            F = self.field
            cols = np.zeros((N, N), dtype=np.int64)
            power = TruncatedSeries.one(F, N)
            for j in range(N):
                cols[:, j] = power.coeffs
                if N > 1:
                    power = power * self.substitutions[i]
            cols.setflags(write=False)
            self._matrices[i] = cols
        return self._matrices[i]

    def law_failures(self) -> list[tuple[int, int]]:
        """Pairs ``(s, t)`` with ``phi_st != phi_s(phi_t)``."""
        if self.precision == 1:
            return []
        bad = []
        for i in range(self.order):
            for j in range(self.order):
                k = self.group.mul(i, j)
                if series_substitute(self.substitutions[i], self.substitutions[j]) != self.substitutions[k]:
                    bad.append((i, j))
        return bad

    def validate(self) -> None:
        e = self.group.identity
        if self.precision > 1 and self.substitutions[e] != TruncatedSeries.mu(self.field, self.precision):
            raise ConstructionError("identity does not act trivially")
        for phi in self.substitutions:
            if self.precision > 1 and (phi.valuation() != 1 or phi[1].is_zero()):
                raise ConstructionError(f"substitution {phi} does not have valuation exactly 1")
        bad = self.law_failures()
        if bad:
            raise ConstructionError(f"action law fails on {len(bad)} pairs, first {bad[0]}")
        for phi in self.substitutions:
            if self.precision > 1:
                h = compositional_inverse(phi)
                if series_substitute(phi, h) != TruncatedSeries.mu(self.field, self.precision):
                    raise ConstructionError("substitution is not invertible")

    def permuted(self, perm: Sequence[int]) -> SeriesAction:
        return SeriesAction(
            self.group.permuted(perm), self.field, self.precision,
            tuple(self.substitutions[i] for i in perm),
        )

    def fixes(self, f: TruncatedSeries, indices: Sequence[int] | None = None) -> bool:
        idx = range(self.order) if indices is None else indices
        return all(self.act(f, i) == f for i in idx)


def action_from_generators(
    group: FiniteGroup, field: FiniteField, precision: int, generator_series: Sequence[TruncatedSeries]
) -> SeriesAction:
    """Extend generator substitutions along BFS words, then verify every pair."""
    subs = []
    mu = TruncatedSeries.mu(field, precision)
    for word in group.words:
        phi = mu
        for k in word:
            phi = series_substitute(phi, generator_series[k]) if precision > 1 else phi
        subs.append(phi)
    action = SeriesAction(group, field, precision, tuple(subs))
    action.validate()
    return action


def trivial_action(group: FiniteGroup, field: FiniteField, precision: int) -> SeriesAction:
    mu = TruncatedSeries.mu(field, precision)
    action = SeriesAction(group, field, precision, tuple(mu for _ in group.elements))
    action.validate()
    return action


# ---------------------------------------------------------------------------
# characteristic 3: Legendre family


def _lam(field: FiniteField) -> MultiPoly:
    return MultiPoly.var("lam", field)


def legendre_curve(field: FiniteField | None = None) -> WeierstrassCurve:
    """``y^2 = x(x - 1)(x - lam)`` over ``F[lam]``."""
    F = field or GF(3)
    lam = _lam(F)
    zero = MultiPoly.const(0, F)
    return WeierstrassCurve(zero, -(lam + 1), zero, lam, zero)


@dataclass(frozen=True)
class IdentityCheck:
    ok: bool
    lhs: object
    rhs: object
    detail: str = ""


def legendre_j_check() -> IdentityCheck:
    """``c4^3 (mu^2-1)^2 == mu^6 Delta`` in ``F3[lam]`` with ``mu = lam + 1``."""
    F = GF(3)
    E = legendre_curve(F)
    mu = _lam(F) + 1
    lhs = c4(E) ** 3 * (mu * mu - 1) ** 2
    rhs = mu**6 * discriminant(E)
    ok = lhs == rhs and lhs.degree("lam") == rhs.degree("lam")
    return IdentityCheck(ok, lhs, rhs, f"degree {lhs.degree('lam')}")


def legendre_spot_check(value=None) -> IdentityCheck:
    """The same identity evaluated at ``lam = value`` in F9 by plugging in first."""
    F = GF(9)
    lam = F(2) if value is None else F(value)
    E = WeierstrassCurve.over(F, (0, -(lam + 1), 0, lam, 0))
    mu = lam + 1
    lhs = c4(E) ** 3 * (mu * mu - 1) ** 2
    rhs = mu**6 * discriminant(E)
    return IdentityCheck(lhs == rhs, lhs, rhs, f"lam={lam}")


def legendre_discriminant_shape() -> bool:
    """Delta is a unit multiple of ``lam^2 (lam-1)^2``."""
    F = GF(3)
    lam = _lam(F)
    target = lam**2 * (lam - 1) ** 2
    d = discriminant(legendre_curve(F))
    return any(d == target * c for c in (1, 2))


def j_tilde_char3(precision: int) -> TruncatedSeries:
    F = GF(3)
    mu = TruncatedSeries.mu(F, precision)
    return mu**6 * series_invert((mu * mu - 1) ** 2)


def s3_action(precision: int = 24) -> SeriesAction:
    """S3 on ``F3[mu]/mu^N`` via ``alpha: mu -> -mu`` and ``beta: mu -> mu/(1-mu)``."""
    if precision < 6:
        raise ValueError("the S3 action needs precision N >= 6")
    F = GF(3)
    group = s3_mobius()
    if group.order != 6:
        raise ConstructionError(f"alpha and beta generate a group of order {group.order}")
    gens = [mobius_series(F, m, precision) for m in (group.elements[i] for i in group.generator_indices)]
    action = action_from_generators(group, F, precision, gens)
    a, b = group.generator_indices
    ab = group.mul(a, b)
    mu = TruncatedSeries.mu(F, precision)
    subs = action.substitutions
    if subs[group.power(a, 2)] != mu or subs[group.power(b, 3)] != mu or subs[group.power(ab, 2)] != mu:
        raise ConstructionError("S3 relations fail as substitutions")
    if not action.fixes(j_tilde_char3(precision), (a, b)):
        raise ConstructionError("j is not invariant under S3")
    return action


def s3_relations(action: SeriesAction) -> dict[str, bool]:
    """Relations recomputed by composing the generator series directly."""
    g = action.group
    a, b = (action.substitutions[i] for i in g.generator_indices)
    mu = TruncatedSeries.mu(action.field, action.precision)
    ab = series_substitute(a, b)
    return {
        "alpha^2": series_substitute(a, a) == mu,
        "beta^3": series_substitute(b, series_substitute(b, b)) == mu,
        "(alpha beta)^2": series_substitute(ab, ab) == mu,
    }


# ---------------------------------------------------------------------------
# characteristic 2: Hesse family


def _proj_vars(ring):
    return tuple(MultiPoly.var(n, ring) for n in ("X", "Y", "Z"))


def hesse_cubic(ring=None) -> MultiPoly:
    """``X^3 + Y^3 + Z^3 - mu XYZ`` over ``ring[mu, X, Y, Z]``."""
    ring = ring or GF(2)
    X, Y, Z = _proj_vars(ring)
    mu = MultiPoly.var("mu", ring)
    return X**3 + Y**3 + Z**3 - mu * X * Y * Z


def _gradient(F: MultiPoly, point) -> tuple[MultiPoly, ...]:
    binding = dict(zip(("X", "Y", "Z"), point))
    return tuple(poly_substitute(F.derivative(n), binding) for n in ("X", "Y", "Z"))


def tangent_contact_order(F: MultiPoly, point, max_order: int = 4) -> int:
    """Order of contact between the cubic and its tangent line at ``point``.

    The tangent is parametrized as ``P + T Q`` with ``Q`` a second point of
    the line; the result is the ``T``-adic valuation of ``F(P + T Q)``.  A
    smooth point is a flex exactly when the order is at least 3.  This works
    in every characteristic, unlike the Hessian, which vanishes identically
    on the Hesse cubic in characteristic 2.
    """
    ring = F.ring
    P = tuple(MultiPoly.const(c, ring) if not isinstance(c, MultiPoly) else c for c in point)
    if not poly_substitute(F, dict(zip(("X", "Y", "Z"), P))).is_zero():
        raise ValueError("point is not on the curve")
    g = _gradient(F, P)
    if all(x.is_zero() for x in g):
        raise ValueError("point is singular")
    zero = MultiPoly.const(0, ring)
    candidates = [(g[1], -g[0], zero), (g[2], zero, -g[0]), (zero, g[2], -g[1])]

    def independent(Q):
        minors = (P[0] * Q[1] - P[1] * Q[0], P[0] * Q[2] - P[2] * Q[0], P[1] * Q[2] - P[2] * Q[1])
        return any(not m.is_zero() for m in minors)

    Q = next(q for q in candidates if independent(q))
    T = MultiPoly.var("T", ring)
    line = {n: P[i] + T * Q[i] for i, n in enumerate(("X", "Y", "Z"))}
    restricted = poly_substitute(F, line)
    coeffs = restricted.coefficients_in(("T",))
    orders = [k[0] for k, c in coeffs.items() if not c.is_zero()]
    return min(orders) if orders else max_order


def is_flex(F: MultiPoly, point) -> bool:
    return tangent_contact_order(F, point) >= 3


def hessian_at(F: MultiPoly, point) -> MultiPoly:
    names = ("X", "Y", "Z")
    H = [[F.derivative(a).derivative(b) for b in names] for a in names]
    det = (
        H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1])
        - H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0])
        + H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0])
    )
    return poly_substitute(det, dict(zip(names, point)))


HESSE_FLEX = (1, 1, 0)


def hesse_curve_to_weierstrass() -> WeierstrassCurve:
    """Weierstrass model of the Hesse cubic over ``F2(mu)``.

    The flex ``[1:1:0]`` has tangent ``X + Y + mu Z = 0``.  New coordinates
    ``X' = Z``, ``Y' = X``, ``Z' = X + Y + mu Z`` send the flex to
    ``[0:1:0]`` and the tangent to ``Z' = 0``; setting ``Z' = 1`` leaves
    ``A y^2 + B xy + C y + D x^3 + E x^2 + F x + G`` and the scaling
    ``x -> -(A/D) x``, ``y -> (A/D) y`` makes it monic.
    """
    R = GF(2)
    cubic = hesse_cubic(R)
    if not is_flex(cubic, HESSE_FLEX):
        raise ConstructionError("chosen base point is not a flex")
    x, y = MultiPoly.var("x", R), MultiPoly.var("y", R)
    mu = MultiPoly.var("mu", R)
    one = MultiPoly.const(1, R)
    affine = poly_substitute(cubic, {"X": y, "Y": one + y + mu * x, "Z": x})
    parts = affine.coefficients_in(("x", "y"))
    allowed = {(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)}
    if any(k not in allowed and not c.is_zero() for k, c in parts.items()):
        raise ConstructionError(f"unexpected monomials after moving the flex: {sorted(parts)}")
    zero = MultiPoly.const(0, R)

    def part(i, j):
        return parts.get((i, j), zero)

    A, B, C, D = part(0, 2), part(1, 1), part(0, 1), part(3, 0)
    E, Fc, G = part(2, 0), part(1, 0), part(0, 0)
    if A.is_zero() or D.is_zero():
        raise ConstructionError("flex chart does not give a cubic in Weierstrass shape")
    A, B, C, D, E, Fc, G = (RationalFunction(p) for p in (A, B, C, D, E, Fc, G))
    return WeierstrassCurve(
        -B / A,
        -E / A,
        C * D / (A * A),
        Fc * D / (A * A),
        -G * D * D / (A * A * A),
    )


def hesse_j_target() -> RationalFunction:
    R = GF(2)
    mu = MultiPoly.var("mu", R)
    return RationalFunction(mu**12, (mu**3 - 1) ** 3)


def hesse_j_check() -> IdentityCheck:
    model = hesse_curve_to_weierstrass()
    j = j_invariant(model)
    target = hesse_j_target()
    return IdentityCheck(j == target, j, target)


def unit_power_of(value: RationalFunction, base: MultiPoly, bound: int = 64) -> int | None:
    """``k`` with ``value = c * base^k`` for a constant ``c``, or None."""
    num, den = value.num, value.den
    for k in range(-bound, bound + 1):
        lhs = num * base ** max(0, -k)
        rhs = den * base ** max(0, k)
        for c in lhs.ring.units() if hasattr(lhs.ring, "units") else (1, -1):
            if lhs == rhs * c:
                return k
    return None


def hesse_discriminant_shape() -> int | None:
    R = GF(2)
    mu = MultiPoly.var("mu", R)
    return unit_power_of(discriminant(hesse_curve_to_weierstrass()), mu**3 - 1)


@dataclass(frozen=True)
class TorsionPointReport:
    on_curve: dict[str, bool]
    contact_order: dict[str, int]
    hessian_identically_zero: bool

    @property
    def ok(self) -> bool:
        return all(self.on_curve.values()) and all(v >= 3 for v in self.contact_order.values())


def hesse_torsion_points_check() -> TorsionPointReport:
    """``[1:0:-1]`` and ``[-1:w:0]`` over ``F4[mu]``: on the curve and flexes."""
    F = GF(4)
    w = F.gen
    cubic = hesse_cubic(F)
    points = {"[1:0:-1]": (F(1), F(0), F(-1)), "[-1:w:0]": (F(-1), w, F(0))}
    on, order = {}, {}
    for name, pt in points.items():
        consts = tuple(MultiPoly.const(c, F) for c in pt)
        on[name] = poly_substitute(cubic, dict(zip(("X", "Y", "Z"), consts))).is_zero()
        order[name] = tangent_contact_order(cubic, pt) if on[name] else 0
    # every coefficient of the Hessian determinant over Z is even
    hz = hessian_at(cubic, _proj_vars(F)).is_zero()
    return TorsionPointReport(on, order, hz)


# -- GL2(F3) acting on (mu, w) ----------------------------------------------

F4 = GF(4)


@dataclass(frozen=True)
class PointMap:
    """``(mu, w) -> (M(w) . mu, frob^flag(w))`` with ``M`` a Mobius matrix over F4.

    Entries of ``M`` are read as functions of ``w``, so they get conjugated
    when an earlier map has flipped ``w``.
    """

    matrix: tuple[FieldElement, FieldElement, FieldElement, FieldElement]
    flag: int

    def __post_init__(self):
        object.__setattr__(self, "matrix", _normalize_pgl(self.matrix))
        object.__setattr__(self, "flag", self.flag % 2)

    def then(self, other: PointMap) -> PointMap:
        """Apply ``self`` first and ``other`` afterwards."""
        m = other.matrix
        if self.flag:
            m = tuple(x.frobenius() for x in m)
        return PointMap(_mul2(m, self.matrix), self.flag + other.flag)


def _mul2(a, b):
    return (a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3])


def _normalize_pgl(m):
    m = tuple(F4(x) for x in m)
    lead = next(x for x in m if not x.is_zero())
    inv = lead.inverse()
    return tuple(x * inv for x in m)


GL2_GENERATOR_MAPS = (
    PointMap((F4.gen, 0, 0, 1), 0),  # [[1,0],[-1,1]]: (w mu, w)
    PointMap((1, 0, 1, -1), 0),  # [[0,-1],[1,0]]: (mu/(mu-1), w)
    PointMap((1, 0, 0, 1), 1),  # [[1,0],[0,-1]]: (mu, w^2)
)


@dataclass(frozen=True)
class GL2Report:
    order: int
    right_failures: list
    left_failures: list
    flag_zero_order: int
    flag_zero_is_sl2: bool
    diag_action: PointMap
    maps: tuple = field(repr=False, default=())

    @property
    def convention(self) -> str:
        if not self.right_failures:
            return "right"
        if not self.left_failures:
            return "left"
        return "none"

    @property
    def ok(self) -> bool:
        return (
            self.order == 48
            and not self.right_failures
            and self.flag_zero_order == 24
            and self.flag_zero_is_sl2
            and self.diag_action == PointMap((1, 0, 0, 1), 1)
        )


def _extend(group: FiniteGroup, gens: Sequence[PointMap], right: bool) -> list[PointMap]:
    ident = PointMap((1, 0, 0, 1), 0)
    out = []
    for word in group.words:
        m = ident
        for k in word:
            # right action on functions: phi_(s g) = phi_s(phi_g), i.e. apply g first
            m = gens[k].then(m) if right else m.then(gens[k])
        out.append(m)
    return out


def _law_failures(group: FiniteGroup, maps: Sequence[PointMap], right: bool) -> list[tuple[str, str]]:
    bad = []
    for i in range(group.order):
        for j in range(group.order):
            k = group.mul(i, j)
            got = maps[j].then(maps[i]) if right else maps[i].then(maps[j])
            if got != maps[k]:
                bad.append((group.labels[i], group.labels[j]))
    return bad


def gl2f3_action_check() -> GL2Report:
    group = gl2f3()
    right = _extend(group, GL2_GENERATOR_MAPS, right=True)
    left = _extend(group, GL2_GENERATOR_MAPS, right=False)
    flag0 = {i for i in range(group.order) if right[i].flag == 0}
    det1 = {i for i in range(group.order) if det3(group.elements[i]) == 1}
    diag = right[group.index((1, 0, 0, 2))]
    return GL2Report(
        order=group.order,
        right_failures=_law_failures(group, right, True),
        left_failures=_law_failures(group, left, False),
        flag_zero_order=len(flag0),
        flag_zero_is_sl2=flag0 == det1,
        diag_action=diag,
        maps=tuple(right),
    )


def j_tilde_char2(precision: int) -> TruncatedSeries:
    mu = TruncatedSeries.mu(F4, precision)
    return mu**12 * series_invert((mu**3 - 1) ** 3)


def sl2f3_series_action(precision: int = 24) -> SeriesAction:
    """SL2(F3) on ``F4[mu]/mu^N``: ``alpha: mu -> w mu``, ``beta: mu -> mu/(mu-1)``."""
    if precision < 12:
        raise ValueError("the SL2(F3) action needs precision N >= 12")
    group = sl2f3()
    if group.order != 24:
        raise ConstructionError(f"SL2(F3) closure has order {group.order}")
    w = F4.gen
    gens = [mobius_series(F4, (w, 0, 0, 1), precision), mobius_series(F4, (1, 0, 1, -1), precision)]
    action = action_from_generators(group, F4, precision, gens)
    a, b = group.generator_indices
    mu = TruncatedSeries.mu(F4, precision)
    if action.substitutions[group.power(b, 2)] != mu:
        raise ConstructionError("beta^2 does not act trivially")
    if action.substitutions[group.power(a, 3)] != mu:
        raise ConstructionError("alpha^3 does not act trivially")
    if not action.fixes(j_tilde_char2(precision), (a, b)):
        raise ConstructionError("j is not invariant under SL2(F3)")
    return action


def z2_trivial_action(precision: int = 1) -> SeriesAction:
    """Z/2 acting trivially on ``F2[mu]/mu^N`` (``N = 1`` is the constants)."""
    return trivial_action(cyclic_group(2), GF(2), precision)
