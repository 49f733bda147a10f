"""Automorphism groups of elliptic curves over finite fields and their differential characters."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .algebra.fields import FieldElement, FiniteField
from .transform import (
    CURVE_VARS,
    TRANSFORM_VARS,
    Transform,
    apply_transform,
    compiled_formulas,
    compose,
    differential_factor,
    invert,
)
from .weierstrass import NotEllipticError, WeierstrassCurve, discriminant

# loop order for the staged scan; v is u^-1 and bound together with u
_SCAN_ORDER = ("u", "s", "r", "t")
_COLUMNS = CURVE_VARS + TRANSFORM_VARS


class UnsupportedGroup(ValueError):
    pass


class InvariantViolation(AssertionError):
    pass


@lru_cache(maxsize=None)
def _power_table(field: FiniteField, max_exp: int) -> np.ndarray:
    table = np.zeros((field.q, max_exp + 1), dtype=np.int64)
    table[:, 0] = 1
    for e in range(1, max_exp + 1):
        table[:, e] = field.mul_table[table[:, e - 1], np.arange(field.q)]
    return table


def scan_fixing_transforms(curve: WeierstrassCurve) -> list[tuple[int, int, int, int]]:
    """All ``(u, r, s, t)`` codes over the curve's field whose action fixes ``curve``.

    Every tuple in ``F_q^* x F_q^3`` is covered; a partial tuple is dropped as
    soon as a transformed coefficient depending only on its bound entries
    already disagrees.
    """
    field = curve.ring
    if not isinstance(field, FiniteField):
        raise TypeError("automorphism scans need a curve over a finite field")
    q = field.q
    target = np.array([a.code for a in curve.coefficients()], dtype=np.int64)
    formulas = compiled_formulas()
    max_exp = max(int(exps.max()) for exps, _, _ in formulas)
    power = _power_table(field, max_exp)
    coeff_codes = [np.array([c % field.p for c in coeffs], dtype=np.int64) for _, coeffs, _ in formulas]

    bound = {"u", "v"}
    pending = list(range(5))
    cand = np.arange(1, q, dtype=np.int64)[:, None]  # columns follow _SCAN_ORDER
    for depth, name in enumerate(_SCAN_ORDER):
        if depth:
            cand = np.hstack([np.repeat(cand, q, axis=0), np.tile(np.arange(q, dtype=np.int64), len(cand))[:, None]])
            bound.add(name)
        ready = [k for k in pending if set(formulas[k][2]) <= bound]
        if not ready or len(cand) == 0:
            continue
        values = np.zeros((len(cand), len(_COLUMNS)), dtype=np.int64)
        values[:, :5] = target
        values[:, 5] = cand[:, 0]
        values[:, 6] = field.inv_table[cand[:, 0]]
        for j, col in enumerate(_SCAN_ORDER[1 : depth + 1], start=1):
            values[:, _COLUMNS.index(col)] = cand[:, j]
        keep = np.ones(len(cand), dtype=bool)
        for k in ready:
            exps, _, _ = formulas[k]
            got = kernels.eval_monomials(exps, coeff_codes[k], values, field.add_table, field.mul_table, power)
            keep &= got == target[k]
            pending.remove(k)
        cand = cand[keep]
    if pending:  # pragma: no cover - every formula depends on at most u, v, r, s, t
        raise RuntimeError("unchecked coefficients after scan")
    order = [_SCAN_ORDER.index(n) for n in ("u", "r", "s", "t")]
    return sorted(tuple(int(x) for x in row[order]) for row in cand)


@dataclass(frozen=True)
class AutomorphismGroup:
    curve: WeierstrassCurve
    elements: tuple[Transform, ...]
    table: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, g: Transform) -> int:
        return self.elements.index(g)

    def element_order(self, g: Transform) -> int:
        e = Transform.identity(self.curve.ring)
        h, n = g, 1
        while h != e:
            h = compose(h, g)
            n += 1
        return n

    def is_cyclic(self) -> bool:
        return any(self.element_order(g) == self.order for g in self.elements)

    def find(self, u: FieldElement) -> list[Transform]:
        return [g for g in self.elements if g.u == u]


def enumerate_automorphisms(curve: WeierstrassCurve) -> AutomorphismGroup:
    field = curve.ring
    if not isinstance(field, FiniteField):
        raise TypeError("automorphism enumeration needs a curve over a finite field")
    if discriminant(curve).is_zero():
        raise NotEllipticError(f"{curve} is singular over {field}")
    codes = scan_fixing_transforms(curve)
    elements = tuple(Transform(*(field.element(c) for c in tup)) for tup in codes)
    pos = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, g in enumerate(elements):
        for j, h in enumerate(elements):
            k = pos.get(compose(g, h))
            if k is None:
                raise InvariantViolation("automorphisms are not closed under composition")
            table[i, j] = k
    if Transform.identity(field) not in pos:
        raise InvariantViolation("identity missing from automorphism group")
    if any(invert(g) not in pos for g in elements):
        raise InvariantViolation("automorphisms are not closed under inversion")
    table.setflags(write=False)
    return AutomorphismGroup(curve, elements, table)


def verify_fixes_curve(group: AutomorphismGroup) -> bool:
    """Re-check every element through the substitution engine."""
    return all(apply_transform(group.curve, g) == group.curve for g in group.elements)


@dataclass(frozen=True)
class NormalizedGenerator:
    element: Transform
    root: FieldElement  # the root of unity the generator corresponds to
    order: int


def normalized_generator(group: AutomorphismGroup) -> NormalizedGenerator:
    """Generator matched to the explicit point actions.

    * order 4: the element acting by ``(x, y) -> (z^2 x, z y)``;
    * order 6: the product of ``(x, y) -> (x, -y - ...)`` and
      ``(x, y) -> (z x, y)``, matched to ``-z``;
    * order 2: ``(x, y) -> (x, -y - ...)`` matched to ``-1``.

    Here ``z`` is the smallest-code primitive root of the needed order.
    """
    F = group.curve.ring
    n = group.order
    if n == 1:
        return NormalizedGenerator(group.elements[0], F.one, 1)
    if n == 2:
        g = [h for h in group.elements if h.u == F(-1)]
        return NormalizedGenerator(g[0], F(-1), 2)
    if n == 4:
        z = F.primitive_root_of_unity(4)
        hits = [g for g in group.elements if g.u**2 == z**2 and g.u**3 == z]
        if len(hits) != 1:
            raise UnsupportedGroup("no element acts by (z^2 x, z y)")
        return NormalizedGenerator(hits[0], z, 4)
    if n == 6:
        z = F.primitive_root_of_unity(3)
        inv = [g for g in group.elements if g.u**2 == F.one and g.u**3 == F(-1)]
        rot = [g for g in group.elements if g.u**2 == z and g.u**3 == F.one]
        if len(inv) != 1 or len(rot) != 1:
            raise UnsupportedGroup("mu_2 x mu_3 factors not found")
        return NormalizedGenerator(compose(inv[0], rot[0]), -z, 6)
    raise UnsupportedGroup(f"no normalization for groups of order {n}")


def mu6_factor_elements(group: AutomorphismGroup) -> tuple[Transform | None, Transform | None]:
    """The elements acting by ``(x, y) -> (x, -y-1)`` and ``(x, y) -> (z x, y)``."""
    F = group.curve.ring
    z = F.primitive_root_of_unity(3)
    flip = Transform(F(-1), F.zero, F.zero, F(-1))
    rot = Transform(z**2, F.zero, F.zero, F.zero)  # u^2 = z, u^3 = 1
    return (flip if flip in group.elements else None, rot if rot in group.elements else None)


def differential_character(group: AutomorphismGroup, generator: NormalizedGenerator | None = None) -> int:
    """Exponent ``e`` in ``Z/n`` with ``g . pi = zeta^e pi`` for the normalized generator."""
    gen = generator or normalized_generator(group)
    n = gen.order
    if n == 1:
        return 0
    if group.element_order(gen.element) != group.order:
        raise UnsupportedGroup("automorphism group is not cyclic")
    factor = differential_factor(gen.element, group.curve)
    hits = [e for e in range(n) if gen.root**e == factor]
    if len(hits) != 1:
        raise InvariantViolation(f"differential factor {factor} is not a power of {gen.root}")
    e = hits[0]
    # consistency on every power of the generator
    h = gen.element
    for k in range(1, n + 1):
        if differential_factor(h, group.curve) != gen.root ** (k * e):
            raise InvariantViolation("differential character is not multiplicative")
        h = compose(h, gen.element)
    return e


@dataclass(frozen=True)
class ChiPair:
    chi4: int
    chi6: int

    def compatible(self) -> bool:
        return self.chi4 % 2 == self.chi6 % 2

    def to_z12(self) -> int:
        if not self.compatible():
            raise InvariantViolation(f"({self.chi4}, {self.chi6}) is not in the fiber product Z/12")
        return next(x for x in range(12) if x % 4 == self.chi4 and x % 6 == self.chi6)


def chi_pair(i: int, e4: int = 1, e6: int = 1) -> ChiPair:
    """Characters of ``lambda^i`` at the mu_4 and mu_6 points.

    ``e4``, ``e6`` are the computed differential-character exponents; the
    result is cross-checked against ``(i mod 4, i mod 6)``.
    """
    pair = ChiPair((i * e4) % 4, (i * e6) % 6)
    if (pair.chi4, pair.chi6) != (i % 4, i % 6):
        raise InvariantViolation(f"lambda^{i} characters {pair} disagree with ({i % 4}, {i % 6})")
    if not pair.compatible():
        raise InvariantViolation(f"{pair} fails mod-2 compatibility")
    return pair


def mu4_curve(field: FiniteField) -> WeierstrassCurve:
    """y^2 = x^3 + x."""
    return WeierstrassCurve.over(field, (0, 0, 0, 1, 0))


def mu6_curve(field: FiniteField) -> WeierstrassCurve:
    """y^2 + y = x^3."""
    return WeierstrassCurve.over(field, (0, 0, 1, 0, 0))
