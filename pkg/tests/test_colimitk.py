from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lampk.colimitk import (
    LevelVector,
    claim_check,
    claim_matrix,
    complement_tuples,
    f_apply,
    level_tuples,
    r_map,
    s_map,
    total_size,
    tuple_dim,
)
from lampk.errors import BudgetError, TruncationError
from lampk.grouprep import builtin

tuples_st = st.lists(st.integers(0, 2), min_size=1, max_size=4).map(tuple)


def test_s_and_r_maps():
    assert s_map((0,)) == (0, 0)
    assert s_map((2, 1)) == (2, 1, 0)
    assert r_map((2, 1, 0)) == (2, 1)


@given(tuples_st)
def test_r_after_s_is_identity(t):
    assert r_map(s_map(t)) == t


def test_tuple_dim():
    s3 = builtin("S3")
    assert tuple_dim(s3, (0,)) == 1
    assert tuple_dim(s3, (2, 2)) == 4
    assert tuple_dim(s3, (2, 1, 0)) == 2
    # the dimension ratio along r_map is the last coordinate's dimension
    for t in product(range(3), repeat=3):
        assert tuple_dim(s3, t) == tuple_dim(s3, r_map(t)) * s3.dims[t[-1]]


def test_f_apply_c2_example():
    c2 = builtin("C2")
    out = f_apply(c2, LevelVector.of((0,)), levels=2)
    assert out == LevelVector({(0,): 1, (0, 0): -1, (0, 1): -1})


def test_f_apply_s3_example():
    s3 = builtin("S3")
    out = f_apply(s3, LevelVector.of((2,)), levels=2)
    assert out == LevelVector(
        {(2,): 1, (2, 0): -1, (2, 1): -1, (2, 2): -2}
    )
    # induced dimension bookkeeping: 2 * 6 = 2 + 2 + 8
    induced = -(out - LevelVector.of((2,)))
    assert sum(c * tuple_dim(s3, t) for t, c in induced.items()) == 2 * 6


def test_f_apply_linear_and_guarded():
    c2 = builtin("C2")
    assert f_apply(c2, LevelVector(), levels=3) == LevelVector()
    a = LevelVector.of((0,), 2)
    b = LevelVector.of((1, 1), -3)
    assert f_apply(c2, a + b, levels=3) == f_apply(c2, a, levels=3) + f_apply(
        c2, b, levels=3
    )
    with pytest.raises(TruncationError):
        f_apply(c2, LevelVector.of((0, 0, 0)), levels=3)


def test_f_apply_matches_pointwise_formula():
    # coefficient at t (level >= 2) is phi(t) - phi(r(t)) * dims[t[-1]]
    s3 = builtin("S3")
    phi = (
        LevelVector.of((1,), 2)
        + LevelVector.of((2, 0), -1)
        + LevelVector.of((2, 2), 5)
    )
    out = f_apply(s3, phi, levels=3)
    for n in (1, 2, 3):
        for t in level_tuples(s3, n):
            expected = phi.coeff(t) if n <= 2 else 0
            if n >= 2:
                expected -= phi.coeff(r_map(t)) * s3.dims[t[-1]]
            assert out.coeff(t) == expected, t


def test_f_apply_agrees_with_claim_matrix_columns():
    for name, levels in (("C2", 3), ("S3", 2)):
        g = builtin(name)
        matrix = claim_matrix(g, levels)
        rows = [t for n in range(1, levels + 1) for t in level_tuples(g, n)]
        col = 0
        for n in range(1, levels):
            for t in level_tuples(g, n):
                image = f_apply(g, LevelVector.of(t), levels)
                for i, row_tuple in enumerate(rows):
                    assert matrix[i][col] == image.coeff(row_tuple)
                col += 1


def test_injectivity_on_embedded_rows_exhaustive():
    # Any nonzero input at levels <= N-1 has a nonzero image coordinate on
    # some tuple ending in 0; exhaustively over {-1, 0, 1} inputs, r = 2.
    c2 = builtin("C2")
    for levels in (2, 3):
        domain = [t for n in range(1, levels) for t in level_tuples(c2, n)]
        for coeffs in product((-1, 0, 1), repeat=len(domain)):
            if not any(coeffs):
                continue
            phi = LevelVector(zip(domain, coeffs))
            image = f_apply(c2, phi, levels)
            embedded = [
                image.coeff(t)
                for n in range(2, levels + 1)
                for t in level_tuples(c2, n)
                if t[-1] == 0
            ]
            assert any(embedded), phi


def test_claim_sizes():
    c2 = builtin("C2")
    assert total_size(c2, 2) == 6
    assert total_size(c2, 3) == 14
    assert total_size(builtin("S3"), 2) == 12
    # complement basis: all of level 1, then nontrivial last coordinate
    assert list(complement_tuples(c2, 1)) == [(0,), (1,)]
    assert list(complement_tuples(c2, 2)) == [(0, 1), (1, 1)]


@pytest.mark.parametrize(
    "name,levels",
    [("C2", 2), ("C2", 3), ("C2", 4), ("C3", 2), ("C3", 3), ("S3", 2), ("S3", 3)],
)
def test_claim_certificate_unimodular(name, levels):
    cert = claim_check(builtin(name), levels)
    assert cert.size == total_size(builtin(name), levels)
    assert cert.det in (1, -1)
    assert cert.holds


def test_claim_budget_guard():
    with pytest.raises(BudgetError):
        claim_check(builtin("C2"), 4, budget=10)


def test_claim_rejects_shallow_truncation():
    from lampk.errors import LampkError

    with pytest.raises(LampkError):
        claim_check(builtin("C2"), 1)


def test_claim_determinant_against_fraction_oracle():
    # Recompute the certificate determinants by plain Gaussian elimination
    # over Fraction, independent of the fraction-free kernel.
    from fractions import Fraction

    def det_fractions(rows):
        n = len(rows)
        m = [[Fraction(x) for x in row] for row in rows]
        det = Fraction(1)
        for k in range(n):
            pivot = next((i for i in range(k, n) if m[i][k]), None)
            if pivot is None:
                return 0
            if pivot != k:
                m[k], m[pivot] = m[pivot], m[k]
                det = -det
            det *= m[k][k]
            inv = 1 / m[k][k]
            for i in range(k + 1, n):
                factor = m[i][k] * inv
                if factor:
                    m[i] = [a - factor * b for a, b in zip(m[i], m[k])]
        return int(det)

    for name, levels in (("C2", 2), ("C2", 3), ("S3", 2)):
        g = builtin(name)
        matrix = claim_matrix(g, levels)
        assert claim_check(g, levels).det == det_fractions(matrix)
