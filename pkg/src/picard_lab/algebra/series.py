"""Truncated power series ``c0 + c1*mu + ... + c_{N-1}*mu^{N-1}`` over a finite field."""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .. import kernels
from .fields import FieldElement, FiniteField


class SeriesError(ValueError):
    pass


class TruncatedSeries:
    """Immutable element of ``F[mu]/(mu^N)``.

    Arithmetic silently truncates at the shared precision ``N``.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim != 1 or arr.shape[0] < 1:
            raise SeriesError("a series needs a positive precision")
        if arr.min(initial=0) < 0 or arr.max(initial=0) >= field.q:
            raise SeriesError(f"coefficient codes out of range for {field}")
        arr = arr.copy()
        arr.setflags(write=False)
        self.field = field
        self.coeffs = arr

    # -- constructors ---------------------------------------------------------
    @classmethod
    def from_values(cls, field: FiniteField, values: Iterable, precision: int) -> TruncatedSeries:
        """Build from ints or field elements; extra terms are dropped, missing ones are zero."""
        codes = np.zeros(precision, dtype=np.int64)
        for i, v in enumerate(values):
            if i >= precision:
                break
            codes[i] = field(v).code
        return cls(field, codes)

    @classmethod
    def zero(cls, field: FiniteField, precision: int) -> TruncatedSeries:
        return cls(field, np.zeros(precision, dtype=np.int64))

    @classmethod
    def constant(cls, field: FiniteField, value, precision: int) -> TruncatedSeries:
        return cls.from_values(field, [value], precision)

    @classmethod
    def one(cls, field: FiniteField, precision: int) -> TruncatedSeries:
        return cls.constant(field, 1, precision)

    @classmethod
    def monomial(cls, field: FiniteField, degree: int, precision: int, coeff=1) -> TruncatedSeries:
        codes = np.zeros(precision, dtype=np.int64)
        if degree < precision:
            codes[degree] = field(coeff).code
        return cls(field, codes)

    @classmethod
    def mu(cls, field: FiniteField, precision: int) -> TruncatedSeries:
        return cls.monomial(field, 1, precision)

    # -- basic accessors ----------------------------------------------------
    @property
    def precision(self) -> int:
        return self.coeffs.shape[0]

    def __len__(self) -> int:
        return self.precision

    def __getitem__(self, i: int) -> FieldElement:
        return self.field.element(int(self.coeffs[i]))

    def values(self) -> list[FieldElement]:
        return [self.field.element(int(c)) for c in self.coeffs]

    def valuation(self) -> int:
        nz = np.flatnonzero(self.coeffs)
        return int(nz[0]) if nz.size else self.precision

    def is_unit(self) -> bool:
        return self.coeffs[0] != 0

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def truncate(self, precision: int) -> TruncatedSeries:
        if precision > self.precision:
            raise SeriesError("cannot raise precision by truncation")
        return TruncatedSeries(self.field, self.coeffs[:precision])

    def _check(self, other: TruncatedSeries) -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.field is not self.field:
            raise SeriesError(f"field mismatch: {self.field} vs {other.field}")
        if other.precision != self.precision:
            raise SeriesError(f"precision mismatch: {self.precision} vs {other.precision}")

    def _lift(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return other
        return TruncatedSeries.constant(self.field, other, self.precision)

    # -- ring operations ----------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        return TruncatedSeries(self.field, self.field.add_table[self.coeffs, other.coeffs])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.field, self.field.neg_table[self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        f = self.field
        return TruncatedSeries(f, f.add_table[self.coeffs, f.neg_table[other.coeffs]])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_multiply(self, other)
        c = self.field(other).code
        return TruncatedSeries(self.field, self.field.mul_table[c, self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return series_invert(self) ** (-n)
        result = TruncatedSeries.one(self.field, self.precision)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, g: TruncatedSeries) -> TruncatedSeries:
        return series_substitute(self, g)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (
            other.field is self.field
            and other.precision == self.precision
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.field.q, self.coeffs.tobytes()))

    def __repr__(self) -> str:
        return f"TruncatedSeries({self}, N={self.precision}, {self.field.name})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            v = str(self.field.element(int(c)))
            coeff = f"({v})" if "+" in v else v
            if i == 0:
                terms.append(v)
            elif coeff == "1":
                terms.append("mu" if i == 1 else f"mu^{i}")
            else:
                terms.append(f"{coeff}*mu" if i == 1 else f"{coeff}*mu^{i}")
        return " + ".join(terms) if terms else "0"


def series_multiply(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    f._check(g)
    F = f.field
    return TruncatedSeries(F, kernels.series_mul(f.coeffs, g.coeffs, F.add_table, F.mul_table))


def series_substitute(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Return ``f(g(mu))`` truncated at the shared precision; requires ``g(0) = 0``."""
    f._check(g)
    if g.valuation() < 1:
        raise SeriesError("substituted series must have positive valuation")
    F = f.field
    return TruncatedSeries(F, kernels.series_compose(f.coeffs, g.coeffs, F.add_table, F.mul_table))


def series_invert(f: TruncatedSeries) -> TruncatedSeries:
    if not f.is_unit():
        raise SeriesError("series with zero constant term is not invertible")
    F = f.field
    return TruncatedSeries(
        F,
        kernels.series_inverse(f.coeffs, F.add_table, F.mul_table, F.neg_table, F.inv_table),
    )


def compositional_inverse(g: TruncatedSeries) -> TruncatedSeries:
    """Series ``h`` with ``g(h) = h(g) = mu``; needs valuation exactly 1."""
    if g.valuation() != 1:
        raise SeriesError("compositional inverse needs valuation exactly 1")
    N = g.precision
    F = g.field
    mu = TruncatedSeries.mu(F, N)
    # fixed-point lift: h <- h - (g(h) - mu) / g1, gains one correct term per step
    c = g[1].inverse()
    h = mu * c
    for _ in range(N):
        h = h - (series_substitute(g, h) - mu) * c
    return h
