"""Vectorized numpy versions of the compiled kernels.

Sums of many field codes go through coordinate arithmetic: a code is
``c0 + p*c1`` so componentwise integer sums reduced mod ``p`` recombine into
the code of the field sum. ``p`` is recovered from the add table
(``add[1, 1] == 2 mod p``).
"""
import numpy as np


def _char(add):
    # 1 + 1 + ... reaches 0 after p summands
    x, p = 1, 1
    while x != 0:
        x = add[x, 1]
        p += 1
    return p


def _code_sum(codes, p, axis):
    c0 = (codes % p).sum(axis=axis) % p
    c1 = (codes // p).sum(axis=axis) % p
    return c0 + p * c1


def series_mul(a, b, add, mul):
    n = a.shape[0]
    p = _char(add)
    prod = mul[a[:, None], b[None, :]]
    i, j = np.indices((n, n))
    keep = (i + j) < n
    idx = (i + j)[keep]
    vals = prod[keep]
    c0 = np.bincount(idx, weights=vals % p, minlength=n)[:n].astype(np.int64) % p
    c1 = np.bincount(idx, weights=vals // p, minlength=n)[:n].astype(np.int64) % p
    return c0 + p * c1


def series_compose(f, g, add, mul):
    n = f.shape[0]
    acc = np.zeros(n, dtype=np.int64)
    for k in range(n - 1, -1, -1):
        acc = series_mul(acc, g, add, mul)
        acc[0] = add[acc[0], f[k]]
    return acc


def series_inverse(f, add, mul, neg, inv):
    n = f.shape[0]
    p = _char(add)
    out = np.zeros(n, dtype=np.int64)
    c = inv[f[0]]
    out[0] = c
    for k in range(1, n):
        terms = mul[f[1 : k + 1], out[k - 1 :: -1][:k]]
        out[k] = neg[mul[c, _code_sum(terms, p, 0)]]
    return out


def row_space_rref(rows, add, mul, neg, inv):
    m, n = rows.shape
    p = _char(add)
    basis = np.zeros((0, n), dtype=np.int64)
    pivots = np.zeros(0, dtype=np.int64)
    for idx in range(m):
        r = rows[idx].astype(np.int64)
        if len(pivots):
            c = r[pivots]
            hit = np.nonzero(c)[0]
            if len(hit):
                # r - sum_b c_b * basis_b
                terms = mul[neg[c[hit]][:, None], basis[hit]]
                r = _code_sum(np.vstack([r[None, :], terms]), p, 0)
        nz = np.nonzero(r)[0]
        if len(nz) == 0:
            continue
        lead = nz[0]
        r = mul[inv[r[lead]], r]
        if len(pivots):
            col = basis[:, lead]
            hit = np.nonzero(col)[0]
            if len(hit):
                upd = mul[neg[col[hit]][:, None], r[None, :]]
                basis[hit] = add[basis[hit], upd]
        pos = int(np.searchsorted(pivots, lead))
        basis = np.insert(basis, pos, r, axis=0)
        pivots = np.insert(pivots, pos, lead)
        if len(pivots) == n:
            break
    return basis, pivots


def eval_monomials(exps, coeffs, values, add, mul, power):
    npts = values.shape[0]
    out = np.zeros(npts, dtype=np.int64)
    for k in range(exps.shape[0]):
        term = np.full(npts, coeffs[k], dtype=np.int64)
        for v in np.nonzero(exps[k])[0]:
            term = mul[term, power[values[:, v], exps[k, v]]]
        out = add[out, term]
    return out
