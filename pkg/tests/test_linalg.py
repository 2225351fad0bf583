from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from gclab.linalg import (
    ContainmentError,
    DimensionMismatch,
    SparseMatrix,
    Subspace,
    as_rational,
    is_in_span,
    kernel_basis,
    quotient_dim,
    rational_str,
    rref,
)
from oracles import dense_rank


def test_rref_identity():
    s, rank = rref(SparseMatrix.from_dense([[1, 0], [0, 1]]))
    assert rank == 2
    assert s.pivot_cols == (0, 1)


def test_rref_zero_matrix():
    s, rank = rref(SparseMatrix.zero(3, 5))
    assert rank == 0 and s.basis == ()


def test_rref_dependent_rows():
    s, rank = rref(SparseMatrix.from_dense([[1, 2], [2, 4]]))
    assert rank == 1
    assert s.basis == ({0: 1, 1: 2},)


def test_rref_empty_matrix():
    assert rref(SparseMatrix.zero(0, 4))[1] == 0


def test_kernel_examples():
    assert kernel_basis(SparseMatrix.from_dense([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).dim == 0
    k = kernel_basis(SparseMatrix.from_dense([[1, 1]]))
    assert k.dim == 1
    v = k.basis[0]
    assert v[0] == -v[1]
    assert kernel_basis(SparseMatrix.zero(2, 4)).dim == 4


def test_is_in_span_examples():
    ok, coeffs = is_in_span({}, Subspace.span(2, [{0: 1}]))
    assert ok and coeffs == {}
    assert not is_in_span({0: 1}, Subspace.span(2, [{1: 1}]))[0]
    ok, coeffs = is_in_span({0: 3, 1: 3}, Subspace.span(2, [{0: 1, 1: 1}]))
    assert ok and coeffs == {0: 3}


def test_is_in_span_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        is_in_span({5: 1}, Subspace.span(2, [{0: 1}]))


def test_quotient_dim():
    big = Subspace.span(3, [{0: 1}, {1: 1}, {2: 1}])
    small = Subspace.span(3, [{0: 1, 1: 1}])
    assert quotient_dim(big, big) == 0
    assert quotient_dim(big, small) == 2
    with pytest.raises(ContainmentError) as exc:
        quotient_dim(Subspace.span(3, [{0: 1}]), small)
    assert exc.value.witness


def test_sparse_matrix_invariants():
    m = SparseMatrix.from_dicts(2, 3, [{2: 1, 0: 0, 1: Fraction(1, 2)}, {}])
    assert m.rows[0] == ((1, mpq(1, 2)), (2, mpq(1)))
    with pytest.raises(DimensionMismatch):
        SparseMatrix.from_dicts(1, 2, [{3: 1}])
    assert m.transpose().transpose() == m


def test_rational_serialization():
    assert rational_str(as_rational("-6/4")) == "-3/2"
    assert rational_str(0) == "0/1"


small_matrix = st.integers(1, 8).flatmap(
    lambda r: st.integers(1, 8).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)))


@settings(max_examples=1000, deadline=None)
@given(small_matrix)
def test_rank_nullity_and_idempotence(dense):
    m = SparseMatrix.from_dense(dense)
    s, rank = rref(m)
    k = kernel_basis(m)
    assert rank + k.dim == m.n_cols
    assert rank == dense_rank(dense)
    for v in k.basis:
        assert m.apply(v) == {}
    again, rank2 = rref(SparseMatrix.from_dicts(s.dim, s.ambient_dim, list(s.basis)))
    assert again == s and rank2 == rank
    for p, row in zip(s.pivot_cols, s.basis):
        assert row[p] == 1
        assert all(other.get(p) is None for q, other in zip(s.pivot_cols, s.basis) if q != p)


fractions = st.fractions(max_denominator=10**6).filter(lambda f: abs(f.numerator) < 10**12)


@given(fractions, fractions)
def test_exact_arithmetic(a, b):
    x, y = as_rational(a), as_rational(b)
    assert (x + y) - y == x
