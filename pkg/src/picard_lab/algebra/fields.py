"""Small finite fields F_p and F_{p^2} with table-driven arithmetic.

Elements are encoded as integer codes ``c0 + p*c1`` for ``c0 + c1*g`` where
``g`` is the generator of the quadratic extension. The defining polynomials
are fixed:

* ``F_4 = F_2[w]/(w^2 + w + 1)``
* ``F_{p^2} = F_p[g]/(g^2 - n)`` for odd ``p``, with ``n`` the least
  quadratic non-residue (so ``F_9 = F_3[i]/(i^2 + 1)``).
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

SUPPORTED_PRIMES = (2, 3, 5, 7, 13)


class FieldError(ValueError):
    pass


def _least_nonresidue(p: int) -> int:
    squares = {(x * x) % p for x in range(p)}
    return next(n for n in range(2, p) if n not in squares)


class FiniteField:
    """The field with ``p**k`` elements (``k`` in {1, 2})."""

    def __init__(self, p: int, k: int = 1):
        if p not in SUPPORTED_PRIMES:
            raise FieldError(f"unsupported characteristic {p}")
        if k not in (1, 2):
            raise FieldError(f"unsupported extension degree {k}")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 2:
            if p == 2:
                # g^2 = g + 1
                self._relation = (1, 1)
                self.generator_name = "w"
            else:
                self._relation = (_least_nonresidue(p), 0)
                self.generator_name = "i" if p == 3 else "g"
        else:
            self._relation = None
            self.generator_name = None
        self._build_tables()

    # -- table construction -------------------------------------------------
    def _coords(self, code: int) -> tuple[int, int]:
        return code % self.p, code // self.p

    def _code(self, c0: int, c1: int = 0) -> int:
        return (c0 % self.p) + self.p * (c1 % self.p)

    def _mul_coords(self, a: int, b: int) -> int:
        a0, a1 = self._coords(a)
        b0, b1 = self._coords(b)
        if self.k == 1:
            return (a0 * b0) % self.p
        n0, n1 = self._relation
        # (a0 + a1 g)(b0 + b1 g) with g^2 = n0 + n1 g
        hi = a1 * b1
        return self._code(a0 * b0 + hi * n0, a0 * b1 + a1 * b0 + hi * n1)

    def _build_tables(self) -> None:
        q = self.q
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            a0, a1 = self._coords(a)
            for b in range(q):
                b0, b1 = self._coords(b)
                add[a, b] = self._code(a0 + b0, a1 + b1)
                mul[a, b] = self._mul_coords(a, b)
        neg = np.array([self._code(-(c % self.p), -(c // self.p)) for c in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            hits = np.nonzero(mul[a] == 1)[0]
            if len(hits) != 1:
                raise FieldError(f"defining polynomial of F_{q} is reducible")
            inv[a] = hits[0]
        self.add_table = add
        self.mul_table = mul
        self.neg_table = neg
        self.inv_table = inv
        for t in (add, mul, neg, inv):
            t.setflags(write=False)

    # -- element construction -----------------------------------------------
    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is self:
                return value
            if value.field.p == self.p and value.field.k <= self.k:
                return FieldElement(self, value.code)
            raise FieldError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, int(value) % self.p)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def from_coords(self, c0: int, c1: int = 0) -> FieldElement:
        if c1 and self.k == 1:
            raise FieldError(f"{self} has no quadratic generator")
        return FieldElement(self, self._code(c0, c1))

    def element(self, code: int) -> FieldElement:
        return FieldElement(self, int(code))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def gen(self) -> FieldElement:
        """The adjoined root (``w`` in F_4, ``i`` in F_9)."""
        return self.from_coords(0, 1)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(self.q)]

    def units(self) -> list[FieldElement]:
        return [FieldElement(self, c) for c in range(1, self.q)]

    def code_of_int(self, n: int) -> int:
        return int(n) % self.p

    def primitive_root_of_unity(self, n: int) -> FieldElement:
        """Smallest-code element of exact multiplicative order ``n``."""
        if (self.q - 1) % n:
            raise FieldError(f"F_{self.q} has no primitive {n}-th root of unity")
        for z in self.units():
            if z.multiplicative_order() == n:
                return z
        raise FieldError("unreachable")  # pragma: no cover

    @property
    def name(self) -> str:
        return f"F{self.q}"

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    """Return the cached field with ``q`` elements."""
    for p in SUPPORTED_PRIMES:
        if q == p:
            return FiniteField(p, 1)
        if q == p * p:
            return FiniteField(p, 2)
    raise FieldError(f"no supported field with {q} elements")


class FieldElement:
    """Immutable element of a :class:`FiniteField`."""

    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _pair(self, other):
        """Return ``(field, a, b)`` with both operands as codes of one field."""
        if isinstance(other, FieldElement):
            f, g = self.field, other.field
            if f is g:
                return f, self.code, other.code
            if f.p != g.p:
                raise FieldError(f"mixing {f} and {g}")
            # prime-subfield codes coincide with their codes in the extension
            big = f if f.k >= g.k else g
            return big, self.code, other.code
        if isinstance(other, (int, np.integer)):
            return self.field, self.code, int(other) % self.field.p
        return None

    def __add__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        f, a, b = pr
        return FieldElement(f, int(f.add_table[a, b]))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, int(self.field.neg_table[self.code]))

    def __sub__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        f, a, b = pr
        return FieldElement(f, int(f.add_table[a, f.neg_table[b]]))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        f, a, b = pr
        return FieldElement(f, int(f.mul_table[a, b]))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.code == 0:
            raise ZeroDivisionError("zero has no inverse")
        return FieldElement(self.field, int(self.field.inv_table[self.code]))

    def __truediv__(self, other):
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        f, a, b = pr
        return FieldElement(f, a) * FieldElement(f, b).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        x, n = self, 1
        while x.code != 1:
            x = x * self
            n += 1
        return n

    def frobenius(self) -> FieldElement:
        return self ** self.field.p

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement) and other.field.p != self.field.p:
            return False
        pr = self._pair(other)
        if pr is None:
            return NotImplemented
        return pr[1] == pr[2]

    def __hash__(self):
        return hash((self.field.p, self.code))

    def coords(self) -> tuple[int, int]:
        return self.field._coords(self.code)

    def __repr__(self) -> str:
        return f"{self}@{self.field.name}"

    def __str__(self) -> str:
        c0, c1 = self.coords()
        if not c1:
            return str(c0)
        g = self.field.generator_name
        lin = g if c1 == 1 else f"{c1}*{g}"
        return lin if not c0 else f"{c0}+{lin}"
