from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hullcodes import linalg
from hullcodes.errors import DimensionMismatch
from hullcodes.field import field_of_order
from hullcodes.linalg import MatrixGF

ORDERS = [2, 3, 4, 5, 7, 9, 16]


@st.composite
def matrices(draw, max_rows=5, max_cols=6, q=None, cols=None):
    q = q or draw(st.sampled_from(ORDERS))
    f = field_of_order(q)
    r = draw(st.integers(1, max_rows))
    c = cols or draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return MatrixGF.from_rows(f, rows)


def _span(M: MatrixGF) -> set[tuple[int, ...]]:
    f = M.field
    out = set()
    for coeffs in itertools.product(range(f.q), repeat=M.rows):
        out.add(tuple(linalg.vec_mat(f, coeffs, M)))
    return out


def test_rref_small_example():
    f = field_of_order(7)
    M = MatrixGF.from_rows(f, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    R, piv = linalg.rref(M)
    assert piv == [0, 1]
    assert R.tolist() == [[1, 0, 1], [0, 1, 1], [0, 0, 0]]
    assert linalg.rank(M) == 2


def test_shape_validation():
    f = field_of_order(5)
    with pytest.raises(DimensionMismatch):
        MatrixGF(f, 2, 2, ((1, 2), (3,)))
    with pytest.raises(ValueError):
        MatrixGF.from_rows(f, [[5]])
    with pytest.raises(DimensionMismatch):
        linalg.matmul(MatrixGF.identity(f, 2), MatrixGF.identity(f, 3))
    with pytest.raises(DimensionMismatch):
        linalg.solve(MatrixGF.identity(f, 2), [1])


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    N = linalg.nullspace_basis(M)
    assert linalg.rank(M) + N.rows == M.cols
    if N.rows:
        assert linalg.matmul(M, linalg.transpose(N)).is_zero()


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_is_transpose_invariant(M):
    assert linalg.rank(M) == linalg.rank(linalg.transpose(M))


@settings(max_examples=100, deadline=None)
@given(matrices(max_rows=3, max_cols=4, q=3))
def test_row_basis_spans_same_space(M):
    B = linalg.row_basis(M)
    assert B.rows == linalg.rank(M)
    assert _span(B) == _span(M)
    assert linalg.same_rowspace(B, M)


@settings(max_examples=150, deadline=None)
@given(matrices(), st.data())
def test_solve_consistent_systems(M, data):
    f = M.field
    x = data.draw(st.lists(st.integers(0, f.q - 1), min_size=M.cols, max_size=M.cols))
    b = [f.dot(row, x) for row in M.entries]
    y = linalg.solve(M, b)
    assert y is not None
    assert [f.dot(row, y) for row in M.entries] == b


def test_solve_inconsistent():
    f = field_of_order(5)
    M = MatrixGF.from_rows(f, [[1, 1], [2, 2]])
    assert linalg.solve(M, [1, 3]) is None


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.data())
def test_intersection_matches_enumeration(q, data):
    A = data.draw(matrices(max_rows=3, q=q, cols=4))
    B = data.draw(matrices(max_rows=3, q=q, cols=4))
    I = linalg.rowspace_intersection(A, B)
    common = _span(A) & _span(B)
    assert q**I.rows == len(common)
    for row in I.entries:
        assert tuple(row) in common


def test_in_rowspace():
    f = field_of_order(4)
    M = MatrixGF.from_rows(f, [[1, 0, 1], [0, 1, 1]])
    assert linalg.in_rowspace(M, [1, 1, 0])
    assert not linalg.in_rowspace(M, [0, 0, 1])


def test_json_round_trip():
    f = field_of_order(9)
    M = MatrixGF.from_rows(f, [[1, 2, 3], [4, 5, 8]])
    assert MatrixGF.from_json(f, M.to_json()) == M
