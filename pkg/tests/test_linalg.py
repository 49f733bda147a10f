import itertools

import numpy as np
import pytest

from picard_lab.algebra import GF
from picard_lab.algebra.linalg import in_span, matvec, nullspace, rank, rref, same_span


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_nullspace_is_annihilated(q):
    F = GF(q)
    rng = np.random.default_rng(q)
    for _ in range(30):
        A = rng.integers(0, q, (rng.integers(1, 6), 7))
        K = nullspace(F, A)
        assert rank(F, A) + K.shape[0] == 7
        for k in K:
            assert not np.any(matvec(F, A, k))


def test_nullspace_brute_force():
    F = GF(3)
    A = np.array([[1, 2, 0, 1], [0, 1, 1, 2]])
    sols = [v for v in itertools.product(range(3), repeat=4) if not np.any(matvec(F, A, np.array(v)))]
    assert len(sols) == 3 ** nullspace(F, A).shape[0]


def test_rref_is_canonical():
    F = GF(4)
    rng = np.random.default_rng(0)
    A = rng.integers(0, 4, (4, 6))
    P = np.array([[1, 1, 0, 0], [0, 2, 0, 0], [0, 0, 3, 1], [0, 0, 0, 1]])  # invertible over F4
    mixed = np.zeros((4, 6), dtype=np.int64)
    for i in range(4):
        acc = np.zeros(6, dtype=np.int64)
        for k in range(4):
            acc = F.add_table[acc, F.mul_table[P[i, k], A[k]]]
        mixed[i] = acc
    assert same_span(F, A, mixed)
    b1, p1 = rref(F, A)
    b2, p2 = rref(F, mixed)
    assert np.array_equal(b1, b2) and np.array_equal(p1, p2)


def test_empty_inputs():
    F = GF(2)
    assert rank(F, np.zeros((0, 3), dtype=np.int64)) == 0
    assert nullspace(F, np.zeros((0, 3), dtype=np.int64), 3).shape == (3, 3)
    assert in_span(F, np.zeros((0, 3), dtype=np.int64), np.zeros(3, dtype=np.int64))
    with pytest.raises(ValueError):
        rref(F, np.zeros(3, dtype=np.int64))


def test_in_span():
    F = GF(3)
    basis = np.array([[1, 0, 2], [0, 1, 1]])
    assert in_span(F, basis, np.array([2, 1, 2]))
    assert not in_span(F, basis, np.array([0, 0, 1]))
