import random

import numpy as np
import pytest

from picard_lab import cohomology, families
from picard_lab.algebra import GF, TruncatedSeries
from picard_lab.algebra.linalg import in_span, nullspace, same_span

# (dim Z1, dim B1, dim H1) from an independent pure-Python solver
ORACLE_DIMS = {
    ("s3", 6): (5, 5, 0),
    ("s3", 12): (10, 10, 0),
    ("sl2f3", 12): (12, 11, 1),
    ("sl2f3", 24): (24, 22, 2),
}


@pytest.fixture(scope="module")
def sl2_24():
    return families.sl2f3_series_action(24)


@pytest.mark.parametrize("key", list(ORACLE_DIMS), ids=lambda k: f"{k[0]}-N{k[1]}")
def test_dims_match_oracle(key, sl2_24):
    name, N = key
    A = sl2_24 if key == ("sl2f3", 24) else cohomology.named_action(name, N)
    rep = cohomology.h1(A)
    assert (rep.dim_z1, rep.dim_b1, rep.dim_h1) == ORACLE_DIMS[key]


def test_s3_at_default_precision():
    rep = cohomology.h1(cohomology.named_action("s3", 24))
    assert (rep.dim_z1, rep.dim_b1, rep.dim_h1) == (20, 20, 0)


@pytest.mark.parametrize("N", [1, 2, 5])
def test_z2_trivial(N):
    rep = cohomology.h1(cohomology.named_action("z2-trivial", N))
    assert rep.dim_h1 == N  # Hom(Z/2, F2^N)
    assert rep.dim_b1 == 0


def test_shard():
    assert cohomology.h1(families.z2_trivial_action(1)).dim_h1 == 1


def test_trivial_group():
    rep = cohomology.h1(cohomology.trivial_group_action())
    assert rep.dim_z1 == 0 and rep.dim_h1 == 0


def test_constants_are_not_coboundaries():
    A = families.s3_action(8)
    c = TruncatedSeries.constant(A.field, 2, 8)
    assert all(A.act(c, s) == c for s in range(A.order))
    assert cohomology.coboundary_vectors(A).shape[1] == A.order * 8


def test_cocycle_basis_satisfies_all_pairs(sl2_24):
    rep = cohomology.h1(sl2_24)
    for vec in rep.z1:
        assert cohomology.Cocycle.from_vector(sl2_24, vec).is_cocycle()
    for vec in rep.b1:
        assert in_span(sl2_24.field, rep.z1, vec)


def test_generator_equations_suffice():
    A = families.s3_action(12)
    a, b = A.group.generator_indices
    pairs = [(s, t) for s in range(A.order) for t in (a, b)]
    full = cohomology.cocycle_space(A)
    partial = nullspace(A.field, cohomology.cocycle_equations(A, pairs), A.order * A.precision)
    assert same_span(A.field, full, partial)


def test_non_cocycle_detected():
    A = families.s3_action(6)
    vec = np.zeros(A.order * 6, dtype=np.int64)
    vec[1] = 1
    assert not cohomology.Cocycle.from_vector(A, vec).is_cocycle()


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_permutation_invariance(seed):
    A = families.s3_action(12)
    perm = list(range(A.order))
    random.Random(seed).shuffle(perm)
    P = A.permuted(perm)
    assert np.array_equal(cohomology.canonical_z1(P), cohomology.canonical_z1(A))
    assert cohomology.h1(P).dim_h1 == cohomology.h1(A).dim_h1


def test_fixed_subspace():
    A = families.s3_action(24)
    assert cohomology.fixed_subspace(A).shape[0] == 4
    assert cohomology.h1(A).dim_b1 == 24 - 4


def test_elimination_char3():
    r = cohomology.elimination_check_char3()
    assert r.ok
    assert r.dimension == 0
    assert (r.brute_force_solutions, r.candidates_tested) == (1, 243)


def test_elimination_char2():
    r = cohomology.elimination_check_char2()
    assert r.ok
    assert r.alpha_only_basis.shape[0] == 3
    assert (r.brute_force_solutions, r.candidates_tested) == (1, 64)
    assert r.chain == ((4, "a3"), (8, "a6"), (10, "a9"))


def test_elimination_guards():
    with pytest.raises(ValueError):
        cohomology.elimination_check_char3(5)
    with pytest.raises(ValueError):
        cohomology.elimination_check_char2(11)


def test_xi_beta2(sl2_24):
    x = cohomology.xi_beta2_analysis(24, sl2_24)
    assert x.ok
    assert x.basis_size == 24
    assert min(x.valuations) == 12


def test_zero_cocycle_xi():
    A = families.sl2f3_series_action(12)
    zero = cohomology.Cocycle.from_vector(A, np.zeros(A.order * 12, dtype=np.int64))
    _, beta = A.group.generator_indices
    x = zero[A.group.mul(beta, beta)]
    assert x.is_zero() and x.valuation() == 12


def test_report_record():
    rec = cohomology.h1(cohomology.named_action("z2-trivial", 3)).as_record()
    assert rec == {"precision": 3, "group_order": 2, "dim_Z1": 3, "dim_B1": 0, "dim_H1": 3}


def test_unknown_group():
    with pytest.raises(ValueError):
        cohomology.named_action("a5", 12)


def test_field_of_sl2_action(sl2_24):
    assert sl2_24.field is GF(4)


def test_xi_beta2_expansion_for_mu():
    # xi_beta = mu gives xi_{beta^2} = mu^beta + mu = mu^2 + mu^3 + ...
    A = families.sl2f3_series_action(12)
    _, beta = A.group.generator_indices
    mu = TruncatedSeries.mu(A.field, 12)
    x = A.act(mu, beta) + mu
    assert x == TruncatedSeries.from_values(A.field, [0, 0] + [1] * 10, 12)
    assert x.valuation() == 2


def test_mu_fails_alpha_congruence():
    A = families.s3_action(6)
    a, _ = A.group.generator_indices
    mu = TruncatedSeries.mu(A.field, 6)
    assert A.act(mu, a) - mu == mu  # -2 mu = mu over F3
