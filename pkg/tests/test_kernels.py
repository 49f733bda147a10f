"""Both kernel backends must agree bit for bit."""
import numpy as np
import pytest

from picard_lab import kernels
from picard_lab.algebra import GF

numba_impl = kernels.numba_impl
numpy_impl = kernels.numpy_impl

pytestmark = pytest.mark.skipif(numba_impl is None, reason="numba not installed")

FIELDS = [GF(q) for q in (2, 3, 4, 7, 9, 13)]


def tables(F):
    return F.add_table, F.mul_table, F.neg_table, F.inv_table


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_series_kernels_agree(F):
    rng = np.random.default_rng(F.q)
    add, mul, neg, inv = tables(F)
    for n in (1, 2, 7, 24):
        for _ in range(20):
            a = rng.integers(0, F.q, n)
            b = rng.integers(0, F.q, n)
            assert np.array_equal(numba_impl.series_mul(a, b, add, mul), numpy_impl.series_mul(a, b, add, mul))
            g = b.copy()
            g[0] = 0
            assert np.array_equal(numba_impl.series_compose(a, g, add, mul), numpy_impl.series_compose(a, g, add, mul))
            a[0] = rng.integers(1, F.q)
            assert np.array_equal(
                numba_impl.series_inverse(a, add, mul, neg, inv), numpy_impl.series_inverse(a, add, mul, neg, inv)
            )


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_rref_agrees(F):
    rng = np.random.default_rng(100 + F.q)
    add, mul, neg, inv = tables(F)
    for shape in [(1, 1), (3, 5), (8, 8), (20, 12), (6, 30)]:
        for _ in range(10):
            rows = rng.integers(0, F.q, shape)
            rows[rng.random(shape) < 0.4] = 0
            b1, p1 = numba_impl.row_space_rref(rows.copy(), add, mul, neg, inv)
            b2, p2 = numpy_impl.row_space_rref(rows.copy(), add, mul, neg, inv)
            assert np.array_equal(b1, b2)
            assert np.array_equal(p1, p2)


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_eval_monomials_agrees(F):
    rng = np.random.default_rng(200 + F.q)
    power = np.zeros((F.q, 7), dtype=np.int64)
    power[:, 0] = 1
    for e in range(1, 7):
        power[:, e] = F.mul_table[power[:, e - 1], np.arange(F.q)]
    exps = rng.integers(0, 7, (15, 4))
    coeffs = rng.integers(0, F.q, 15)
    values = rng.integers(0, F.q, (50, 4))
    args = (exps, coeffs, values, F.add_table, F.mul_table, power)
    assert np.array_equal(numba_impl.eval_monomials(*args), numpy_impl.eval_monomials(*args))


def test_rref_does_not_mutate_input():
    F = GF(7)
    rows = np.array([[2, 4, 6], [1, 2, 3]], dtype=np.int64)
    before = rows.copy()
    for impl in (numba_impl, numpy_impl):
        impl.row_space_rref(rows, *tables(F))
        assert np.array_equal(rows, before)


def test_backend_selection(monkeypatch):
    import importlib

    monkeypatch.setenv("PICARD_LAB_KERNELS", "numpy")
    mod = importlib.reload(kernels)
    try:
        assert mod.BACKEND == "numpy"
        assert mod.series_mul is numpy_impl.series_mul
        monkeypatch.setenv("PICARD_LAB_KERNELS", "fortran")
        with pytest.raises(ValueError):
            importlib.reload(kernels)
    finally:
        monkeypatch.delenv("PICARD_LAB_KERNELS")
        importlib.reload(kernels)
