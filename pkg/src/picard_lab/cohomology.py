"""First cohomology of finite groups acting on truncated power series.

A 1-cocycle is ``s -> xi_s`` with ``xi_st = xi_s^t + xi_t``.  Unknowns are
the ``|G| * N`` coefficients of the ``xi_s``, flattened element-major, and
everything is exact linear algebra over the base field.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .algebra.fields import FiniteField
from .algebra.linalg import in_span, nullspace, rref, same_span
from .algebra.series import TruncatedSeries
from .families import SeriesAction, cyclic_group, s3_action, sl2f3_series_action, trivial_action


class SolverDisagreement(RuntimeError):
    """Two independent methods gave different answers."""


@dataclass(frozen=True)
class Cocycle:
    action: SeriesAction
    values: tuple[TruncatedSeries, ...]

    @classmethod
    def from_vector(cls, action: SeriesAction, vec) -> Cocycle:
        N = action.precision
        vec = np.asarray(vec, dtype=np.int64)
        return cls(action, tuple(TruncatedSeries(action.field, vec[i * N : (i + 1) * N]) for i in range(action.order)))

    def vector(self) -> np.ndarray:
        return np.concatenate([v.coeffs for v in self.values])

    def __getitem__(self, i: int) -> TruncatedSeries:
        return self.values[i]

    def failures(self) -> list[tuple[int, int]]:
        """Pairs breaking the cocycle identity, recomputed with series arithmetic."""
        A = self.action
        bad = []
        for s in range(A.order):
            for t in range(A.order):
                if self.values[A.group.mul(s, t)] != A.act(self.values[s], t) + self.values[t]:
                    bad.append((s, t))
        return bad

    def is_cocycle(self) -> bool:
        return not self.failures()


def _block_add(F: FiniteField, rows: np.ndarray, r0: int, c0: int, block: np.ndarray) -> None:
    n, m = block.shape
    sub = rows[r0 : r0 + n, c0 : c0 + m]
    rows[r0 : r0 + n, c0 : c0 + m] = F.add_table[sub, block]


def cocycle_equations(action: SeriesAction, pairs=None) -> np.ndarray:
    """Rows ``xi_st - M_t xi_s - xi_t`` for every pair ``(s, t)`` (or the given pairs)."""
    F = action.field
    N = action.precision
    G = action.order
    if pairs is None:
        pairs = [(s, t) for s in range(G) for t in range(G)]
    rows = np.zeros((len(pairs) * N, G * N), dtype=np.int64)
    eye = np.eye(N, dtype=np.int64)
    neg_eye = F.neg_table[eye]
    for k, (s, t) in enumerate(pairs):
        r0 = k * N
        _block_add(F, rows, r0, action.group.mul(s, t) * N, eye)
        _block_add(F, rows, r0, s * N, F.neg_table[action.matrix(t)])
        _block_add(F, rows, r0, t * N, neg_eye)
    return rows


def cocycle_space(action: SeriesAction) -> np.ndarray:
    """Reduced echelon basis of Z^1, one flattened cocycle per row."""
    return nullspace(action.field, cocycle_equations(action), action.order * action.precision)


def coboundary_vectors(action: SeriesAction) -> np.ndarray:
    """``s -> (mu^j)^s - mu^j`` for each ``j < N``."""
    F = action.field
    N = action.precision
    out = np.zeros((N, action.order * N), dtype=np.int64)
    for j in range(N):
        g = TruncatedSeries.monomial(F, j, N)
        out[j] = np.concatenate([(action.act(g, s) - g).coeffs for s in range(action.order)])
    return out


def coboundaries(action: SeriesAction) -> np.ndarray:
    return rref(action.field, coboundary_vectors(action))[0]


def fixed_subspace(action: SeriesAction) -> np.ndarray:
    """Basis of ``{g : g^s = g for all s}``."""
    F = action.field
    N = action.precision
    eye = np.eye(N, dtype=np.int64)
    blocks = [F.add_table[action.matrix(s), F.neg_table[eye]] for s in range(action.order)]
    return nullspace(F, np.vstack(blocks), N)


@dataclass(frozen=True)
class CohomologyReport:
    precision: int
    group_order: int
    dim_z1: int
    dim_b1: int
    representatives: np.ndarray  # rows complete a B^1 basis to a Z^1 basis
    z1: np.ndarray
    b1: np.ndarray

    @property
    def dim_h1(self) -> int:
        return self.dim_z1 - self.dim_b1

    def as_record(self) -> dict:
        return {
            "precision": self.precision,
            "group_order": self.group_order,
            "dim_Z1": self.dim_z1,
            "dim_B1": self.dim_b1,
            "dim_H1": self.dim_h1,
        }


def h1(action: SeriesAction) -> CohomologyReport:
    F = action.field
    z1 = cocycle_space(action)
    b1 = coboundaries(action)
    if b1.shape[0] and not all(in_span(F, z1, v) for v in b1):
        raise SolverDisagreement("a coboundary is not a cocycle")
    reps = []
    span = b1
    for v in z1:
        if not in_span(F, span, v):
            reps.append(v)
            span = np.vstack([span, v[None, :]]) if span.size else v[None, :]
    reps_arr = np.array(reps, dtype=np.int64).reshape(len(reps), z1.shape[1] if z1.ndim == 2 else 0)
    report = CohomologyReport(action.precision, action.order, z1.shape[0], b1.shape[0], reps_arr, z1, b1)
    if report.dim_h1 != len(reps) or report.dim_h1 < 0:
        raise SolverDisagreement("H^1 representatives do not match the dimension count")
    return report


def canonical_z1(action: SeriesAction) -> np.ndarray:
    """Z^1 basis re-indexed by sorted element labels, so it ignores enumeration order."""
    z1 = cocycle_space(action)
    N = action.precision
    order = sorted(range(action.order), key=lambda i: action.group.labels[i])
    cols = np.concatenate([np.arange(i * N, (i + 1) * N) for i in order])
    return rref(action.field, z1[:, cols])[0] if z1.shape[0] else z1


# ---------------------------------------------------------------------------
# elimination checks


def _difference_matrix(action: SeriesAction, element: int, degrees: range) -> np.ndarray:
    """Column ``k`` is the coefficient vector of ``(mu^d)^s - mu^d`` for ``d = degrees[k]``."""
    F = action.field
    N = action.precision
    cols = []
    for d in degrees:
        g = TruncatedSeries.monomial(F, d, N)
        cols.append((action.act(g, element) - g).coeffs)
    return np.array(cols, dtype=np.int64).T


def _satisfies(action: SeriesAction, g: TruncatedSeries, elements) -> bool:
    return all((action.act(g, s) - g).is_zero() for s in elements)


def _series(field: FiniteField, N: int, degrees, codes) -> TruncatedSeries:
    c = np.zeros(N, dtype=np.int64)
    for d, x in zip(degrees, codes):
        c[d] = x
    return TruncatedSeries(field, c)


@dataclass(frozen=True)
class EliminationResult:
    precision: int
    degrees: tuple[int, ...]
    linear_solution: np.ndarray  # basis rows over ``degrees``
    brute_force_solutions: int
    candidates_tested: int
    alpha_only_basis: np.ndarray | None = None
    chain: tuple[tuple[int, str], ...] = ()

    @property
    def dimension(self) -> int:
        return self.linear_solution.shape[0]

    @property
    def ok(self) -> bool:
        return self.dimension == 0 and self.brute_force_solutions == 1


def elimination_check_char3(precision: int = 6) -> EliminationResult:
    """``g = a1 mu + ... + a5 mu^5`` with ``g^alpha = g^beta = g`` mod ``mu^6`` is zero."""
    if precision < 6:
        raise ValueError("the characteristic-3 elimination needs N >= 6")
    action = s3_action(6)
    F = action.field
    gens = action.group.generator_indices
    degrees = range(1, 6)
    mat = np.vstack([_difference_matrix(action, s, degrees) for s in gens])
    sol = nullspace(F, mat, len(degrees))
    count = tested = 0
    for codes in itertools.product(range(F.q), repeat=len(degrees)):
        tested += 1
        if _satisfies(action, _series(F, 6, degrees, codes), gens):
            count += 1
    if (sol.shape[0] == 0) != (count == 1) or F.q ** sol.shape[0] != count:
        raise SolverDisagreement(f"linear algebra gives dim {sol.shape[0]}, brute force {count} solutions")
    return EliminationResult(6, tuple(degrees), sol, count, tested)


def _unit_vectors(n: int, positions) -> np.ndarray:
    out = np.zeros((len(positions), n), dtype=np.int64)
    for k, p in enumerate(positions):
        out[k, p] = 1
    return out


def elimination_chain(action: SeriesAction, element: int, degrees: tuple[int, ...]) -> tuple[tuple[int, str], ...]:
    """Order in which coefficients of ``g^s - g`` force the unknowns to vanish.

    Repeatedly look for the lowest-degree coefficient that involves exactly one
    unknown not yet known to be zero.
    """
    mat = _difference_matrix(action, element, degrees)
    alive = set(range(len(degrees)))
    chain = []
    while alive:
        step = None
        for row in range(mat.shape[0]):
            hits = [k for k in alive if mat[row, k]]
            if len(hits) == 1:
                step = (row, hits[0])
                break
        if step is None:
            break
        chain.append((step[0], f"a{degrees[step[1]]}"))
        alive.discard(step[1])
    return tuple(chain)


def elimination_check_char2(precision: int = 12) -> EliminationResult:
    """``g = a1 mu + ... + a11 mu^11`` with ``g^alpha = g^beta = g`` mod ``mu^12`` is zero."""
    if precision < 12:
        raise ValueError("the characteristic-2 elimination needs N >= 12")
    action = sl2f3_series_action(12)
    F = action.field
    alpha, beta = action.group.generator_indices
    degrees = tuple(range(1, 12))
    n = len(degrees)
    # linear algebra
    a_mat = _difference_matrix(action, alpha, degrees)
    alpha_only = nullspace(F, a_mat, n)
    expected = _unit_vectors(n, [degrees.index(d) for d in (3, 6, 9)])
    if not same_span(F, alpha_only, expected):
        raise SolverDisagreement("alpha-invariants are not spanned by mu^3, mu^6, mu^9")
    b_mat = _difference_matrix(action, beta, degrees)
    sol = nullspace(F, np.vstack([a_mat, b_mat]), n)
    # staged brute force: alpha is diagonal, so it constrains coordinates one at a time
    off_diag = a_mat.copy()
    off_diag[[d for d in degrees], np.arange(n)] = 0
    if off_diag.any():
        raise SolverDisagreement("alpha does not act diagonally on monomials")
    allowed = []
    for d in degrees:
        allowed.append([c for c in range(F.q) if _satisfies(action, _series(F, 12, [d], [c]), [alpha])])
    free = [d for d, vals in zip(degrees, allowed) if len(vals) > 1]
    if free != [3, 6, 9]:
        raise SolverDisagreement(f"alpha leaves degrees {free} free")
    count = tested = 0
    for codes in itertools.product(*(allowed[degrees.index(d)] for d in free)):
        tested += 1
        if _satisfies(action, _series(F, 12, free, codes), [alpha, beta]):
            count += 1
    if F.q ** sol.shape[0] != count:
        raise SolverDisagreement(f"linear algebra gives dim {sol.shape[0]}, brute force {count} solutions")
    chain = elimination_chain(action, beta, (3, 6, 9))
    return EliminationResult(12, degrees, sol, count, tested, alpha_only, chain)


# ---------------------------------------------------------------------------
# xi_{beta^2}


@dataclass(frozen=True)
class XiBeta2Result:
    precision: int
    basis_size: int
    not_cocycles: list[int]
    not_invariant: list[int]
    low_valuation: list[int]
    formula_mismatch: list[int]
    valuations: list[int]

    @property
    def ok(self) -> bool:
        return not (self.not_cocycles or self.not_invariant or self.low_valuation or self.formula_mismatch)


def xi_beta2_analysis(precision: int = 24, action: SeriesAction | None = None) -> XiBeta2Result:
    if precision < 12:
        raise ValueError("the xi_{beta^2} analysis needs N >= 12")
    action = action or sl2f3_series_action(precision)
    g = action.group
    _, beta = g.generator_indices
    b2 = g.mul(beta, beta)
    z1 = cocycle_space(action)
    bad_cocycle, bad_inv, bad_val, bad_formula, vals = [], [], [], [], []
    for k, vec in enumerate(z1):
        xi = Cocycle.from_vector(action, vec)
        if not xi.is_cocycle():
            bad_cocycle.append(k)
        x = xi[b2]
        if not action.fixes(x):
            bad_inv.append(k)
        if x != action.act(xi[beta], beta) + xi[beta]:
            bad_formula.append(k)
        vals.append(x.valuation())
        if x.valuation() < 2:
            bad_val.append(k)
    return XiBeta2Result(precision, z1.shape[0], bad_cocycle, bad_inv, bad_val, bad_formula, vals)


# ---------------------------------------------------------------------------
# named actions


GROUPS = ("s3", "sl2f3", "z2-trivial")


def named_action(name: str, precision: int) -> SeriesAction:
    if name == "s3":
        return s3_action(precision)
    if name == "sl2f3":
        return sl2f3_series_action(precision)
    if name == "z2-trivial":
        from .algebra.fields import GF

        return trivial_action(cyclic_group(2), GF(2), precision)
    raise ValueError(f"unknown group {name!r}; choose from {', '.join(GROUPS)}")


def trivial_group_action(precision: int = 4) -> SeriesAction:
    from .algebra.fields import GF

    return trivial_action(cyclic_group(1), GF(2), precision)


__all__ = [
    "Cocycle",
    "CohomologyReport",
    "EliminationResult",
    "SolverDisagreement",
    "XiBeta2Result",
    "canonical_z1",
    "coboundaries",
    "cocycle_equations",
    "cocycle_space",
    "elimination_chain",
    "elimination_check_char2",
    "elimination_check_char3",
    "fixed_subspace",
    "h1",
    "named_action",
    "trivial_group_action",
    "xi_beta2_analysis",
]
