"""Compiled inner loops over finite-field codes.

Every kernel takes the field's lookup tables explicitly so one compiled
specialization serves all fields.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def series_mul(a, b, add, mul):
    n = a.shape[0]
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(n - i):
            bj = b[j]
            if bj != 0:
                out[i + j] = add[out[i + j], mul[ai, bj]]
    return out


@njit(cache=True)
def series_compose(f, g, add, mul):
    # Horner: f(g) = f0 + g*(f1 + g*(f2 + ...))
    n = f.shape[0]
    acc = np.zeros(n, dtype=np.int64)
    tmp = np.zeros(n, dtype=np.int64)
    for k in range(n - 1, -1, -1):
        for i in range(n):
            tmp[i] = 0
        for i in range(n):
            ai = acc[i]
            if ai == 0:
                continue
            for j in range(n - i):
                gj = g[j]
                if gj != 0:
                    tmp[i + j] = add[tmp[i + j], mul[ai, gj]]
        tmp[0] = add[tmp[0], f[k]]
        for i in range(n):
            acc[i] = tmp[i]
    return acc


@njit(cache=True)
def series_inverse(f, add, mul, neg, inv):
    n = f.shape[0]
    out = np.zeros(n, dtype=np.int64)
    c = inv[f[0]]
    out[0] = c
    for k in range(1, n):
        s = 0
        for i in range(1, k + 1):
            if f[i] != 0 and out[k - i] != 0:
                s = add[s, mul[f[i], out[k - i]]]
        out[k] = neg[mul[c, s]]
    return out


@njit(cache=True)
def row_space_rref(rows, add, mul, neg, inv):
    """Reduced row echelon basis of the row space, rows processed in order.

    Returns ``(basis, pivots)`` with basis rows sorted by pivot column.
    """
    m, n = rows.shape
    basis = np.zeros((min(m, n), n), dtype=np.int64)
    pivots = np.full(min(m, n), -1, dtype=np.int64)
    rank = 0
    r = np.zeros(n, dtype=np.int64)
    for idx in range(m):
        for j in range(n):
            r[j] = rows[idx, j]
        # basis is kept fully reduced, so each pivot is cleared exactly once
        for b in range(rank):
            c = r[pivots[b]]
            if c != 0:
                nc = neg[c]
                for j in range(n):
                    bj = basis[b, j]
                    if bj != 0:
                        r[j] = add[r[j], mul[nc, bj]]
        lead = -1
        for j in range(n):
            if r[j] != 0:
                lead = j
                break
        if lead < 0:
            continue
        s = inv[r[lead]]
        for j in range(n):
            r[j] = mul[s, r[j]]
        for b in range(rank):
            c = basis[b, lead]
            if c != 0:
                nc = neg[c]
                for j in range(n):
                    if r[j] != 0:
                        basis[b, j] = add[basis[b, j], mul[nc, r[j]]]
        # insert keeping pivots ascending
        pos = rank
        while pos > 0 and pivots[pos - 1] > lead:
            pivots[pos] = pivots[pos - 1]
            for j in range(n):
                basis[pos, j] = basis[pos - 1, j]
            pos -= 1
        pivots[pos] = lead
        for j in range(n):
            basis[pos, j] = r[j]
        rank += 1
        if rank == n:
            break
    return basis[:rank].copy(), pivots[:rank].copy()


@njit(cache=True)
def eval_monomials(exps, coeffs, values, add, mul, power):
    """Evaluate ``sum_k coeffs[k] * prod_v values[:, v]**exps[k, v]`` per point."""
    npts = values.shape[0]
    nmon, nvar = exps.shape
    out = np.zeros(npts, dtype=np.int64)
    for p in range(npts):
        acc = 0
        for k in range(nmon):
            term = coeffs[k]
            for v in range(nvar):
                e = exps[k, v]
                if e != 0:
                    term = mul[term, power[values[p, v], e]]
                    if term == 0:
                        break
            if term != 0:
                acc = add[acc, term]
        out[p] = acc
    return out
