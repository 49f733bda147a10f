"""The coordinate-change group G = {(u, r, s, t)} and its action on Weierstrass curves.

A transform ``(u, r, s, t)`` introduces new coordinates
``x' = u^2 x + r``, ``y' = u^3 y + s u^2 x + t``. The transformed curve is
the old equation rewritten in ``(x', y')``: we substitute
``x = u^-2 (x' - r)``, ``y = u^-3 (y' - s (x' - r) - t)`` and rescale by
``u^6``. With this direction the discriminant picks up ``u^12``.

Symbolically ``u`` is invertible through the companion variable ``v`` and the
rewrite ``u*v -> 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra.fields import FieldElement, FiniteField
from .algebra.poly import INDEX, ZZ, MultiPoly, poly_substitute
from .weierstrass import WeierstrassCurve, c4, discriminant

TRANSFORM_VARS = ("u", "v", "r", "s", "t")
CURVE_VARS = ("a1", "a2", "a3", "a4", "a6")


class RenormalizationError(RuntimeError):
    """The substituted equation did not come back in Weierstrass form."""


@dataclass(frozen=True)
class Transform:
    u: object
    r: object
    s: object
    t: object

    def __iter__(self):
        return iter((self.u, self.r, self.s, self.t))

    @classmethod
    def identity(cls, ring=ZZ) -> Transform:
        if isinstance(ring, FiniteField):
            return cls(ring.one, ring.zero, ring.zero, ring.zero)
        return cls(1, 0, 0, 0)

    @classmethod
    def generic(cls, ring=ZZ) -> Transform:
        return cls(*(MultiPoly.var(n, ring) for n in ("u", "r", "s", "t")))

    @classmethod
    def over(cls, field: FiniteField, values) -> Transform:
        u, r, s, t = (field(x) for x in values)
        if u.is_zero():
            raise ValueError("u must be a unit")
        return cls(u, r, s, t)

    def is_symbolic(self) -> bool:
        return any(isinstance(x, MultiPoly) for x in self)

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self) + ")"


def unit_inverse(u):
    """Inverse of a unit: field elements, +-1, or monomials ``c*u^a*v^b`` with ``c`` a unit."""
    if isinstance(u, FieldElement):
        return u.inverse()
    if isinstance(u, int):
        if u not in (1, -1):
            raise ValueError(f"{u} is not a unit of Z")
        return u
    if isinstance(u, MultiPoly):
        if len(u.terms) != 1:
            raise ValueError(f"{u} is not a unit monomial")
        (mono, c), = u.terms.items()
        if any(e for i, e in enumerate(mono) if i not in (INDEX["u"], INDEX["v"])):
            raise ValueError(f"{u} is not a unit monomial")
        inv = unit_inverse(c)
        return MultiPoly.monomial({"u": mono[INDEX["v"]], "v": mono[INDEX["u"]]}, inv, u.ring).reduce_uv()
    raise TypeError(f"cannot invert {type(u).__name__}")


def _simplify(x):
    return x.reduce_uv() if isinstance(x, MultiPoly) else x


def compose(g2: Transform, g1: Transform) -> Transform:
    """Group law with ``g2`` in the primed slot:

    ``(u',r',s',t')·(u,r,s,t) = (u u', u^2 r' + r, u s' + s, u^3 t' + u^2 r' s + t)``.

    Acting on curves, ``g2`` is applied first and then ``g1``.
    """
    u2, r2, s2, t2 = g2
    u1, r1, s1, t1 = g1
    return Transform(
        _simplify(u1 * u2),
        _simplify(u1 * u1 * r2 + r1),
        _simplify(u1 * s2 + s1),
        _simplify(u1**3 * t2 + u1 * u1 * r2 * s1 + t1),
    )


def invert(g: Transform) -> Transform:
    u, r, s, t = g
    w = unit_inverse(u)
    # solve compose(g, h) = identity coordinate by coordinate
    R = -(w * w * r)
    S = -(w * s)
    T = -(w**3 * t) - w * w * r * S
    return Transform(_simplify(w), _simplify(R), _simplify(S), _simplify(T))


def _ring_for(c: WeierstrassCurve, g: Transform):
    for x in (*c.coefficients(), *g):
        if isinstance(x, MultiPoly):
            return x.ring
        if isinstance(x, FieldElement):
            return x.field
    return ZZ


def _as_poly(x, ring) -> MultiPoly:
    return x.change_ring(ring) if isinstance(x, MultiPoly) else MultiPoly.const(x, ring)


def _unpoly(p: MultiPoly, like):
    """Return constants as plain ring elements when the inputs were not symbolic."""
    if like and p.is_constant():
        val = p.constant_value()
        return int(val) if p.ring is ZZ else val
    return p


def _substitution(g: Transform, ring):
    u, r, s, t = (_as_poly(x, ring) for x in g)
    w = _as_poly(unit_inverse(g.u), ring)
    x = MultiPoly.var("x", ring)
    y = MultiPoly.var("y", ring)
    X = (w * w * (x - r)).reduce_uv()
    Y = (w**3 * (y - s * (x - r) - t)).reduce_uv()
    return u, w, X, Y


def apply_transform(c: WeierstrassCurve, g: Transform) -> WeierstrassCurve:
    """The curve ``c`` written in the coordinates introduced by ``g``."""
    ring = _ring_for(c, g)
    concrete = not any(isinstance(x, MultiPoly) for x in (*c.coefficients(), *g))
    curve = c.map(lambda a: _as_poly(a, ring))
    u, _, X, Y = _substitution(g, ring)
    eq = poly_substitute(curve.equation(), {"x": X, "y": Y}, reduce_uv=True)
    eq = (eq * u**6).reduce_uv()
    parts = eq.coefficients_in(("x", "y"))
    allowed = {(0, 2), (1, 1), (0, 1), (3, 0), (2, 0), (1, 0), (0, 0)}
    extra = set(parts) - allowed
    if extra:
        raise RenormalizationError(f"unexpected monomials x^i y^j {sorted(extra)}")
    zero = MultiPoly.const(0, ring)
    if parts.get((0, 2)) != 1 or parts.get((3, 0)) != -1:
        raise RenormalizationError("leading coefficients did not renormalize to y^2 - x^3")
    get = lambda k: parts.get(k, zero)  # noqa: E731
    new = (get((1, 1)), -get((2, 0)), get((0, 1)), -get((1, 0)), -get((0, 0)))
    return WeierstrassCurve(*(_unpoly(a, concrete) for a in new))


@lru_cache(maxsize=None)
def coefficient_formulas(ring=ZZ) -> tuple[MultiPoly, ...]:
    """Transformed a1..a6 for the generic curve and transform, from the substitution engine."""
    out = apply_transform(WeierstrassCurve.generic(ring), Transform.generic(ring))
    return out.coefficients()


@lru_cache(maxsize=None)
def compiled_formulas() -> tuple[tuple[np.ndarray, np.ndarray, tuple[str, ...]], ...]:
    """Per coefficient: exponent matrix over ``a1..a6, u, v, r, s, t`` and integer coefficients."""
    names = CURVE_VARS + TRANSFORM_VARS
    idx = [INDEX[n] for n in names]
    compiled = []
    for f in coefficient_formulas():
        monos = sorted(f.terms)
        exps = np.array([[m[i] for i in idx] for m in monos], dtype=np.int64).reshape(len(monos), len(idx))
        coeffs = np.array([f.terms[m] for m in monos], dtype=np.int64)
        compiled.append((exps, coeffs, tuple(n for n in TRANSFORM_VARS if n in f.variables())))
    return tuple(compiled)


def differential_ratio(c: WeierstrassCurve, g: Transform):
    """``(k, n)`` with ``dx = n dx'`` and ``2y + a1 x + a3 = k (2y' + a1' x' + a3')``.

    The invariant differential then changes as ``pi' = (k/n) pi``.
    """
    ring = _ring_for(c, g)
    curve = c.map(lambda a: _as_poly(a, ring))
    _, _, X, Y = _substitution(g, ring)
    if X.derivative("y"):
        raise RenormalizationError("x depends on y'")
    n = X.derivative("x")
    x = MultiPoly.var("x", ring)
    y = MultiPoly.var("y", ring)
    a1, _, a3, _, _ = curve.coefficients()
    old = poly_substitute(2 * y + a1 * x + a3, {"x": X, "y": Y}, reduce_uv=True)
    new_curve = apply_transform(curve, Transform(*(_as_poly(v, ring) for v in g)))
    b1, _, b3, _, _ = (_as_poly(a, ring) for a in new_curve.coefficients())
    new = 2 * y + b1 * x + b3
    if new.is_zero():
        raise RenormalizationError("invariant differential has zero denominator")
    k = _unit_ratio(old, new, ring)
    return k, n


def _clear_v(p: MultiPoly) -> tuple[MultiPoly, int]:
    """``(p * u^k, k)`` with ``k`` large enough that no ``v`` remains."""
    k = max(p.degree("v"), 0)
    return ((p * MultiPoly.var("u", p.ring) ** k).reduce_uv() if k else p), k


def _unit_ratio(old: MultiPoly, new: MultiPoly, ring) -> MultiPoly:
    """The unit ``c*u^e`` (``e`` may be negative) with ``old = c*u^e*new``."""
    (A, ka), (B, kb) = _clear_v(old), _clear_v(new)
    la, lb = max(A.terms), max(B.terms)
    iu = INDEX["u"]
    diff = [a - b for a, b in zip(la, lb)]
    e = diff[iu] - ka + kb
    diff[iu] = 0
    if any(diff):
        raise RenormalizationError("denominators are not proportional")
    ca, cb = A.terms[la], B.terms[lb]
    if ring is ZZ:
        if ca % cb:
            raise RenormalizationError("denominators are not proportional")
        c = ca // cb
    else:
        c = ca / cb
    k = MultiPoly.monomial({"u": e} if e >= 0 else {"v": -e}, c, ring)
    if (k * new).reduce_uv() != old:
        raise RenormalizationError("denominators are not proportional")
    return k


def differential_factor(g: Transform, curve: WeierstrassCurve | None = None):
    """Factor by which the invariant differential rescales under ``g`` (equals ``u^-1``)."""
    ring = _ring_for(curve or WeierstrassCurve(0, 0, 0, 0, 0), g)
    if curve is None:
        curve = WeierstrassCurve.generic(ring)
    k, n = differential_ratio(curve, g)
    factor = (k * unit_inverse(n)).reduce_uv()
    return _unpoly(factor, not g.is_symbolic())


@dataclass(frozen=True)
class Character:
    """The character ``chi_0^m : (u, r, s, t) -> u^m``."""

    exponent: int

    def __call__(self, g: Transform):
        return _power(g.u, self.exponent)

    def __mul__(self, other: Character) -> Character:
        return Character(self.exponent + other.exponent)

    def inverse(self) -> Character:
        return Character(-self.exponent)


def _power(u, m: int):
    if m >= 0:
        return _simplify(u**m)
    return _simplify(unit_inverse(u) ** (-m))


@dataclass(frozen=True)
class UnitOnU:
    """The unit ``beta * Delta^m`` on the space of Weierstrass equations."""

    beta: object
    m: int


def act_on_unit(g: Transform, w: UnitOnU) -> UnitOnU:
    return UnitOnU(_simplify(w.beta * _power(g.u, 12 * w.m)), w.m)


@dataclass(frozen=True)
class Trivialization:
    trivial: bool
    m: int | None = None
    witness: UnitOnU | None = None


def character_trivializable(chi: Character) -> Trivialization:
    """``chi = chi_0^e`` gives a trivial line bundle iff ``e = 12 m``.

    The witness is the unit ``Delta^-m``, on which G acts through ``chi^-1``.
    """
    if chi.exponent % 12:
        return Trivialization(False)
    m = chi.exponent // 12
    return Trivialization(True, m, UnitOnU(1, -m))


def witness_matches(chi: Character, g: Transform, result: Trivialization) -> bool:
    """Check ``g * witness = chi^-1(g) * witness`` by exponent arithmetic."""
    w = result.witness
    acted = act_on_unit(g, w)
    expected = _simplify(chi.inverse()(g) * w.beta)
    return acted.m == w.m and acted.beta == expected


def kernel_elements(field: FiniteField) -> set[Transform]:
    F = field
    return {Transform(F.one, r, s, t) for r in F.elements() for s in F.elements() for t in F.elements()}


def kernel_closure(field: FiniteField) -> set[Transform]:
    """Subgroup generated by the images of x -> (1,x,0,0), (1,0,x,0), (1,0,0,x)."""
    F = field
    zero, one = F.zero, F.one
    gens = []
    for x in F.elements():
        gens += [Transform(one, x, zero, zero), Transform(one, zero, x, zero), Transform(one, zero, zero, x)]
    seen = {Transform.identity(F)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                k = compose(h, g)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
    return seen


@dataclass(frozen=True)
class KernelReport:
    q: int
    reached: int
    expected: int
    decomposition_ok: bool

    @property
    def ok(self) -> bool:
        return self.reached == self.expected and self.decomposition_ok


def kernel_generation_check(field: FiniteField) -> KernelReport:
    closure = kernel_closure(field)
    target = kernel_elements(field)
    one, zero = field.one, field.zero
    decomposition = all(
        compose(compose(Transform(one, g.r, zero, zero), Transform(one, zero, g.s, zero)),
                Transform(one, zero, zero, g.t - g.r * g.s)) == g
        for g in target
    )
    return KernelReport(field.q, len(closure & target) if closure <= target else -1, field.q**3, decomposition)


def covariance_identities():
    """Symbolic Delta' - u^12 Delta and c4' - u^4 c4 for the generic curve (both should vanish)."""
    c = WeierstrassCurve.generic()
    new = WeierstrassCurve(*coefficient_formulas())
    u = MultiPoly.var("u")
    d = (discriminant(new) - u**12 * discriminant(c)).reduce_uv()
    k = (c4(new) - u**4 * c4(c)).reduce_uv()
    return d, k


def parse_transform(text: str) -> Transform:
    """Read ``u,r,s,t@ring``; ``u`` must be a unit of the ring."""
    from .weierstrass import parse_values

    (u, r, s, t), ring = parse_values(text, 4)
    if isinstance(ring, FiniteField):
        return Transform.over(ring, (u, r, s, t))
    if ring == "sym":
        unit_inverse(u)
        return Transform(u, r, s, t)
    if u not in (1, -1):
        raise ValueError("over Z the u-coordinate must be 1 or -1")
    return Transform(int(u), int(r), int(s), int(t))
