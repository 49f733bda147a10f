"""Sparse multivariate polynomials over Z or a small finite field.

Monomials are dense exponent tuples over the fixed variable list
:data:`VARIABLES`; comparing those tuples is the lexicographic order used for
canonical printing. No relation between ``u`` and ``v`` is implied until
:meth:`MultiPoly.reduce_uv` is called.
"""
from __future__ import annotations

import ast
from collections.abc import Mapping

from .fields import FieldElement, FiniteField

VARIABLES = (
    "a1", "a2", "a3", "a4", "a6",
    "u", "v", "r", "s", "t",
    "lam", "mu",
    "x", "y", "X", "Y", "Z", "T",
)
INDEX = {name: i for i, name in enumerate(VARIABLES)}
NVARS = len(VARIABLES)
_U, _V = INDEX["u"], INDEX["v"]
ZERO_EXP = (0,) * NVARS


class RingMismatch(ValueError):
    pass


class IntegerRing:
    """The coefficient ring Z (coefficients are Python ints)."""

    name = "Z"
    p = 0

    def __call__(self, value):
        if isinstance(value, FieldElement):
            raise RingMismatch(f"cannot coerce {value!r} into Z")
        return int(value)

    def __repr__(self) -> str:
        return "ZZ"


ZZ = IntegerRing()


def _common_ring(a, b):
    if a is b:
        return a
    if a is ZZ:
        return b
    if b is ZZ:
        return a
    if isinstance(a, FiniteField) and isinstance(b, FiniteField) and a.p == b.p:
        return a if a.k >= b.k else b
    raise RingMismatch(f"incompatible coefficient rings {a!r} and {b!r}")


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    return tuple(a + b for a, b in zip(m1, m2))


class MultiPoly:
    """Immutable polynomial with no stored zero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None, ring=ZZ):
        self.ring = ring
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = ring(c)
                if c:
                    clean[tuple(mono)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, ring) -> MultiPoly:
        # terms already canonical
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = terms
        obj._hash = None
        return obj

    # -- constructors ---------------------------------------------------------
    @classmethod
    def var(cls, name: str, ring=ZZ) -> MultiPoly:
        if name not in INDEX:
            raise KeyError(f"unknown variable {name!r}; known: {', '.join(VARIABLES)}")
        mono = [0] * NVARS
        mono[INDEX[name]] = 1
        return cls({tuple(mono): 1}, ring)

    @classmethod
    def const(cls, value, ring=ZZ) -> MultiPoly:
        return cls({ZERO_EXP: value}, ring)

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff=1, ring=ZZ) -> MultiPoly:
        mono = [0] * NVARS
        for name, e in exps.items():
            mono[INDEX[name]] = e
        return cls({tuple(mono): coeff}, ring)

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, FieldElement)):
            ring = self.ring
            if isinstance(other, FieldElement):
                ring = _common_ring(ring, other.field)
            return MultiPoly.const(other, ring)
        return None

    def change_ring(self, ring) -> MultiPoly:
        """Map coefficients along Z -> F_p or F_p -> F_{p^2}."""
        if ring is self.ring:
            return self
        if self.ring is not ZZ:
            _common_ring(self.ring, ring)
            if isinstance(ring, FiniteField) and ring.k < self.ring.k:
                raise RingMismatch(f"cannot restrict {self.ring!r} to {ring!r}")
        return MultiPoly(self.terms, ring)

    def _aligned(self, other: MultiPoly):
        ring = _common_ring(self.ring, other.ring)
        return self.change_ring(ring), other.change_ring(ring), ring

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, ring = self._aligned(other)
        terms = dict(a.terms)
        for m, c in b.terms.items():
            s = terms.get(m)
            s = c if s is None else s + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly._raw(terms, ring)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()}, self.ring)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, ring = self._aligned(other)
        terms: dict = {}
        get = terms.get
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                m = _mono_mul(m1, m2)
                s = get(m)
                terms[m] = c1 * c2 if s is None else s + c1 * c2
        return MultiPoly._raw({m: c for m, c in terms.items() if c}, ring)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative int exponent")
        result = MultiPoly.const(1, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        try:
            a, b, _ = self._aligned(other)
        except RingMismatch:
            return False
        return a.terms == b.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((m, int(c) if isinstance(c, int) else c.code) for m, c in self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- structure ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == ZERO_EXP for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms.get(ZERO_EXP, self.ring(0))

    def variables(self) -> list[str]:
        used = [False] * NVARS
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return [VARIABLES[i] for i in range(NVARS) if used[i]]

    def degree(self, name: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if name is None:
            return max(sum(m) for m in self.terms)
        i = INDEX[name]
        return max(m[i] for m in self.terms)

    def coefficients_in(self, names: tuple[str, ...]) -> dict[tuple, MultiPoly]:
        """Split by the exponents of ``names``; values are polynomials in the rest."""
        idx = [INDEX[n] for n in names]
        out: dict[tuple, dict] = {}
        for m, c in self.terms.items():
            key = tuple(m[i] for i in idx)
            rest = list(m)
            for i in idx:
                rest[i] = 0
            out.setdefault(key, {})[tuple(rest)] = c
        return {k: MultiPoly._raw(v, self.ring) for k, v in out.items()}

    def reduce_uv(self) -> MultiPoly:
        """Apply the rewrite ``u*v -> 1`` to every monomial."""
        terms: dict = {}
        for m, c in self.terms.items():
            k = min(m[_U], m[_V])
            if k:
                m = list(m)
                m[_U] -= k
                m[_V] -= k
                m = tuple(m)
            s = terms.get(m)
            terms[m] = c if s is None else s + c
        return MultiPoly._raw({m: c for m, c in terms.items() if c}, self.ring)

    def derivative(self, name: str) -> MultiPoly:
        i = INDEX[name]
        terms: dict = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                m2 = list(m)
                m2[i] = e - 1
                terms[tuple(m2)] = c * e
        return MultiPoly(terms, self.ring)

    def map_coefficients(self, fn) -> MultiPoly:
        return MultiPoly({m: fn(c) for m, c in self.terms.items()}, self.ring)

    def __call__(self, **bindings) -> MultiPoly:
        return poly_substitute(self, bindings)

    # -- printing -------------------------------------------------------------
    def __repr__(self) -> str:
        return f"MultiPoly({self!s}, {self.ring!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                (VARIABLES[i] if e == 1 else f"{VARIABLES[i]}^{e}") for i, e in enumerate(m) if e
            )
            cs = str(c)
            neg = cs.startswith("-")
            if neg:
                cs = cs[1:]
            if "+" in cs:
                cs = f"({cs})"
            if mono:
                body = mono if cs == "1" else f"{cs}*{mono}"
            else:
                body = cs
            parts.append(("- " if neg else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def poly_substitute(p: MultiPoly, bindings: Mapping[str, object], reduce_uv: bool = False) -> MultiPoly:
    """Simultaneously replace variables by polynomials (unbound variables stay).

    With ``reduce_uv`` the rewrite ``u*v -> 1`` is applied after every
    multiplication.
    """
    ring = p.ring
    images: dict[int, MultiPoly] = {}
    for name, value in bindings.items():
        if name not in INDEX:
            raise KeyError(f"unknown variable {name!r}")
        img = value if isinstance(value, MultiPoly) else MultiPoly.const(value, ring)
        ring = _common_ring(ring, img.ring)
        images[INDEX[name]] = img
    images = {i: img.change_ring(ring) for i, img in images.items()}
    one = MultiPoly.const(1, ring)
    power_cache: dict[tuple[int, int], MultiPoly] = {}

    def power(i: int, e: int) -> MultiPoly:
        key = (i, e)
        if key not in power_cache:
            if e == 1:
                val = images[i]
            else:
                val = power(i, e - 1) * images[i]
                if reduce_uv:
                    val = val.reduce_uv()
            power_cache[key] = val
        return power_cache[key]

    total = MultiPoly._raw({}, ring)
    for m, c in p.terms.items():
        kept = tuple(0 if i in images else e for i, e in enumerate(m))
        term = MultiPoly({kept: c}, ring)
        for i, e in enumerate(m):
            if e and i in images:
                term = term * power(i, e)
                if reduce_uv:
                    term = term.reduce_uv()
        total = total + term
    return total.reduce_uv() if reduce_uv else total


def generic_variables(ring=ZZ, names=VARIABLES) -> dict[str, MultiPoly]:
    return {n: MultiPoly.var(n, ring) for n in names}


_ALLOWED_BINOPS = (ast.Add, ast.Sub, ast.Mult, ast.Pow)


def parse_poly(text: str, ring=ZZ) -> MultiPoly:
    """Parse ``+ - * ^ **``, integers, parentheses and known variable names.

    In F_4 the name ``w`` denotes the generator; in other quadratic fields
    its generator name (``i`` in F_9).
    """
    gen_name = getattr(ring, "generator_name", None)
    try:
        tree = ast.parse(text.strip().replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.BinOp) and isinstance(node.op, _ALLOWED_BINOPS):
            left = walk(node.left)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return left**node.right.value
            right = walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            return left * right
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = walk(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MultiPoly.const(node.value, ring)
        if isinstance(node, ast.Name):
            if gen_name is not None and node.id == gen_name:
                return MultiPoly.const(ring.gen, ring)
            return MultiPoly.var(node.id, ring)
        raise ValueError(f"unsupported syntax in polynomial {text!r}")

    return walk(tree)


class RationalFunction:
    """A fraction ``num/den`` of polynomials; equality is by cross-multiplication.

    No cancellation is attempted.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = num if isinstance(num, MultiPoly) else MultiPoly.const(num)
        den = den if isinstance(den, MultiPoly) else MultiPoly.const(den, num.ring)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        num, den, _ = num._aligned(den)
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (MultiPoly, int, FieldElement)):
            if not isinstance(other, MultiPoly):
                other = self.num._coerce(other)
            return RationalFunction(other, MultiPoly.const(1, other.ring))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalFunction(({self.num}) / ({self.den}))"
