"""Exact linear algebra over a finite field on matrices of element codes."""
from __future__ import annotations

import numpy as np

from .. import kernels
from .fields import FiniteField


def rref(field: FiniteField, rows) -> tuple[np.ndarray, np.ndarray]:
    """Reduced row echelon basis of the row space and its pivot columns.

    The result depends only on the row space, so it is a canonical basis.
    """
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    if rows.ndim != 2:
        raise ValueError("expected a 2-d array of codes")
    if rows.shape[0] == 0:
        return np.zeros((0, rows.shape[1]), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return kernels.row_space_rref(
        rows, field.add_table, field.mul_table, field.neg_table, field.inv_table
    )


def rank(field: FiniteField, rows) -> int:
    return rref(field, rows)[0].shape[0]


def nullspace(field: FiniteField, rows, ncols: int | None = None) -> np.ndarray:
    """Basis (in reduced echelon form) of ``{x : rows @ x = 0}``."""
    rows = np.asarray(rows, dtype=np.int64)
    n = rows.shape[1] if rows.ndim == 2 and rows.size else ncols
    if n is None:
        raise ValueError("cannot infer the number of unknowns")
    if rows.size == 0:
        return np.eye(n, dtype=np.int64)
    basis, pivots = rref(field, rows)
    free = [j for j in range(n) if j not in set(pivots.tolist())]
    vecs = np.zeros((len(free), n), dtype=np.int64)
    neg = field.neg_table
    for k, j in enumerate(free):
        vecs[k, j] = 1
        vecs[k, pivots] = neg[basis[:, j]]
    return rref(field, vecs)[0] if len(free) else vecs


def matvec(field: FiniteField, mat, vec) -> np.ndarray:
    """``mat @ vec`` over the field."""
    mat = np.asarray(mat, dtype=np.int64)
    vec = np.asarray(vec, dtype=np.int64)
    prods = field.mul_table[mat, vec[None, :]]
    out = np.zeros(mat.shape[0], dtype=np.int64)
    for j in range(mat.shape[1]):
        out = field.add_table[out, prods[:, j]]
    return out


def in_span(field: FiniteField, basis, vec) -> bool:
    basis = np.asarray(basis, dtype=np.int64)
    if basis.shape[0] == 0:
        return not np.any(vec)
    return rank(field, np.vstack([basis, np.asarray(vec)[None, :]])) == rank(field, basis)


def same_span(field: FiniteField, a, b) -> bool:
    ra, _ = rref(field, a)
    rb, _ = rref(field, b)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))
