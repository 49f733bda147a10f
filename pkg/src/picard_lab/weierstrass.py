"""Weierstrass equations y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 and their invariants."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .algebra.fields import FieldElement, FiniteField
from .algebra.poly import ZZ, MultiPoly, RationalFunction


class NotEllipticError(ValueError):
    """Raised when an operation needs a nonzero discriminant."""


class CurveClass(enum.Enum):
    SMOOTH = "smooth"
    NODAL = "nodal"
    CUSPIDAL = "cuspidal"


def _ring_of(c):
    if isinstance(c, FieldElement):
        return c.field
    if isinstance(c, MultiPoly):
        return ("poly", c.ring)
    if isinstance(c, RationalFunction):
        return ("frac", c.ring)
    if isinstance(c, Fraction):
        return "Q"
    if isinstance(c, int):
        return ZZ
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _unify(coeffs):
    """Coerce plain ints into the ring of the other coefficients."""
    kinds = [c for c in coeffs if not isinstance(c, int)]
    if not kinds:
        return tuple(coeffs)
    model = kinds[0]
    if isinstance(model, FieldElement):
        f = max((c.field for c in kinds if isinstance(c, FieldElement)), key=lambda F: F.k)
        return tuple(f(c) for c in coeffs)
    if isinstance(model, MultiPoly):
        ring = model.ring
        out = []
        for c in coeffs:
            if isinstance(c, MultiPoly):
                out.append(c)
            else:
                out.append(MultiPoly.const(c, ring))
        return tuple(out)
    if isinstance(model, RationalFunction):
        return tuple(c if isinstance(c, RationalFunction) else RationalFunction(c) for c in coeffs)
    if isinstance(model, Fraction):
        return tuple(Fraction(c) for c in coeffs)
    return tuple(coeffs)


@dataclass(frozen=True)
class WeierstrassCurve:
    a1: object
    a2: object
    a3: object
    a4: object
    a6: object

    def __post_init__(self):
        unified = _unify(self.coefficients())
        for name, val in zip(("a1", "a2", "a3", "a4", "a6"), unified):
            object.__setattr__(self, name, val)
        rings = {repr(_ring_of(c)) for c in unified}
        if len(rings) != 1:
            raise TypeError(f"coefficients live in different rings: {sorted(rings)}")

    def coefficients(self) -> tuple:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def ring(self):
        return _ring_of(self.a1)

    @classmethod
    def generic(cls, ring=ZZ) -> WeierstrassCurve:
        """The curve with indeterminate coefficients a1..a6."""
        return cls(*(MultiPoly.var(n, ring) for n in ("a1", "a2", "a3", "a4", "a6")))

    @classmethod
    def over(cls, field: FiniteField, coeffs) -> WeierstrassCurve:
        return cls(*(field(c) for c in coeffs))

    def equation(self, xvar: str = "x", yvar: str = "y") -> MultiPoly:
        """``y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6`` as a polynomial in x, y."""
        ring = self.a1.ring if isinstance(self.a1, MultiPoly) else (
            self.a1.field if isinstance(self.a1, FieldElement) else ZZ
        )
        if isinstance(self.a1, (Fraction, RationalFunction)):
            raise TypeError("equation() needs polynomial, integer or finite-field coefficients")
        x = MultiPoly.var(xvar, ring)
        y = MultiPoly.var(yvar, ring)
        a1, a2, a3, a4, a6 = self.coefficients()
        return y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6

    def map(self, fn) -> WeierstrassCurve:
        return WeierstrassCurve(*(fn(c) for c in self.coefficients()))

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self.coefficients()) + "]"


def b_invariants(c: WeierstrassCurve) -> tuple:
    a1, a2, a3, a4, a6 = c.coefficients()
    b2 = a1 * a1 + 4 * a2
    b4 = a1 * a3 + 2 * a4
    b6 = a3 * a3 + 4 * a6
    b8 = -(a1 * a3 * a4) - a4 * a4 + a1 * a1 * a6 + a2 * a3 * a3 + 4 * a2 * a6
    return b2, b4, b6, b8


def discriminant(c: WeierstrassCurve):
    b2, b4, b6, b8 = b_invariants(c)
    return -(b2 * b2 * b8) - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def c4(c: WeierstrassCurve):
    b2, b4, _, _ = b_invariants(c)
    return b2 * b2 - 24 * b4


def _is_zero(x) -> bool:
    if isinstance(x, (MultiPoly, RationalFunction, FieldElement)):
        return x.is_zero()
    return x == 0


def j_invariant(c: WeierstrassCurve):
    """``c4^3 / Delta``.

    Over Z or Q the value is a :class:`~fractions.Fraction`; over a finite
    field a field element; over polynomial rings a :class:`RationalFunction`
    (compared by cross-multiplication).
    """
    num = c4(c) ** 3
    den = discriminant(c)
    if isinstance(den, MultiPoly):
        if den.is_zero():
            raise NotEllipticError("discriminant is identically zero")
        return RationalFunction(num, den)
    if isinstance(den, RationalFunction):
        if den.is_zero():
            raise NotEllipticError("discriminant is identically zero")
        return num / den
    if _is_zero(den):
        raise NotEllipticError("discriminant vanishes: not an elliptic curve")
    if isinstance(den, FieldElement):
        return num / den
    return Fraction(num) / Fraction(den)


def classify(c: WeierstrassCurve) -> CurveClass:
    """Smooth / nodal / cuspidal for a curve over a field (F_q or Q)."""
    if isinstance(c.a1, (MultiPoly, RationalFunction)):
        raise TypeError("classification is only defined over fields")
    if isinstance(c.a1, int) and not isinstance(c.a1, bool):
        c = c.map(Fraction)
    if not _is_zero(discriminant(c)):
        return CurveClass.SMOOTH
    if not _is_zero(c4(c)):
        return CurveClass.NODAL
    return CurveClass.CUSPIDAL


def reduce_mod(c: WeierstrassCurve, field: FiniteField) -> WeierstrassCurve:
    """Image of an integral curve under Z -> F_q."""
    if not all(isinstance(a, int) for a in c.coefficients()):
        raise TypeError("reduction needs integer coefficients")
    return c.map(field)


def is_singular_point(c: WeierstrassCurve, point) -> bool:
    x0, y0 = point
    a1, a2, a3, a4, a6 = c.coefficients()
    f = y0 * y0 + a1 * x0 * y0 + a3 * y0 - x0**3 - a2 * x0 * x0 - a4 * x0 - a6
    fx = a1 * y0 - 3 * x0 * x0 - 2 * a2 * x0 - a4
    fy = 2 * y0 + a1 * x0 + a3
    return all(_is_zero(v) for v in (f, fx, fy))


def tangent_cone_discriminant(c: WeierstrassCurve, point):
    """Discriminant of the quadratic part of the equation at a singular point.

    At ``(x0, y0)`` the quadratic part is ``A X^2 + B XY + C Y^2`` with
    ``A = -(3 x0 + a2)``, ``B = a1``, ``C = 1``; in characteristic not 2 it
    has two distinct tangent directions iff ``B^2 - 4AC != 0``.
    """
    if not is_singular_point(c, point):
        raise ValueError(f"{point} is not a singular point of {c}")
    x0, _ = point
    A = -(3 * x0 + c.a2)
    B = c.a1
    return B * B - 4 * A


RING_TAGS = ("Z", "F2", "F3", "F4", "F5", "F7", "F9", "F13", "sym")


def parse_ring(tag: str):
    """``Z``, ``F<q>`` or ``sym`` (polynomials over Z)."""
    from .algebra.fields import GF

    tag = tag.strip()
    if tag not in RING_TAGS:
        raise ValueError(f"unknown ring {tag!r}; choose from {', '.join(RING_TAGS)}")
    if tag == "Z":
        return ZZ
    if tag == "sym":
        return "sym"
    return GF(int(tag[1:]))


def parse_values(text: str, count: int) -> tuple[list, object]:
    """Split ``v1,...,vn@ring`` into parsed values and the ring."""
    from .algebra.poly import parse_poly

    body, sep, tag = text.rpartition("@")
    if not sep:
        raise ValueError(f"missing '@ring' suffix in {text!r}")
    ring = parse_ring(tag)
    items = [x for x in body.split(",")]
    if len(items) != count:
        raise ValueError(f"expected {count} comma-separated values, got {len(items)}")
    out = []
    for item in items:
        p = parse_poly(item, ZZ if ring in (ZZ, "sym") else ring)
        if ring == "sym":
            out.append(p)
            continue
        if not p.is_constant():
            raise ValueError(f"{item.strip()!r} is not a constant of {tag}")
        out.append(p.constant_value())
    return out, ring


def parse_curve(text: str) -> WeierstrassCurve:
    """Read ``a1,a2,a3,a4,a6@ring``, e.g. ``0,0,0,1,0@F13`` or ``a1,a2,a3,a4,a6@sym``."""
    values, ring = parse_values(text, 5)
    if ring == "sym":
        return WeierstrassCurve(*(v.change_ring(ZZ) for v in values))
    if isinstance(ring, FiniteField):
        return WeierstrassCurve.over(ring, values)
    return WeierstrassCurve(*(int(v) for v in values))
