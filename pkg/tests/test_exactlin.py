from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tauslice.exactlin import (
    Matrix, QQ, PrimeField, FieldError,
    row_space_basis, span_matrix, in_span, coordinates_in_basis,
    complement_basis, intersect_row_spaces,
)


F5 = PrimeField(5)


def mat(rows):
    return Matrix(QQ, [[Fraction(x) for x in r] for r in rows])


# --- pinned examples -------------------------------------------------------

def test_rref_rank_pinned():
    m = mat([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert m.rank() == 2
    r, pivots = m.rref()
    assert pivots == (0, 1)
    assert r.rows[0] == (1, 0, 1)
    assert r.rows[1] == (0, 1, 1)


def test_kernel_and_solve():
    m = mat([[1, 2, 3], [0, 1, 1]])
    kb = m.kernel_basis()
    assert len(kb) == 1
    for k in kb:
        assert (m @ k).is_zero()
    b = Matrix.column(QQ, [Fraction(6), Fraction(2)])
    x = m.solve(b)
    assert x is not None
    prod = m @ x
    assert prod.flatten() == (6, 2)
    # inconsistent system
    m2 = mat([[1, 0], [1, 0]])
    assert m2.solve(Matrix.column(QQ, [Fraction(1), Fraction(2)])) is None


def test_inverse_pinned():
    m = mat([[2, 1], [1, 1]])
    inv = m.inverse()
    assert (m @ inv) == Matrix.identity(QQ, 2)
    assert inv.rows[0] == (1, -1)
    assert mat([[1, 1], [1, 1]]).inverse() is None


def test_prime_field_arithmetic():
    assert F5.add(3, 4) == 2
    assert F5.inv(2) == 3
    assert F5.coerce(Fraction(1, 2)) == 3
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(FieldError):
        F5.coerce(Fraction(1, 5))


def test_span_helpers():
    sp = span_matrix(QQ, [(1, 0, 1), (0, 1, 0)], 3)
    assert sp.nrows == 2
    assert in_span(sp, (2, 3, 2))
    assert not in_span(sp, (0, 0, 1))
    coords = coordinates_in_basis(sp, (2, 3, 2))
    assert coords is not None
    comp = complement_basis(sp)
    assert len(comp) == 1
    inter = intersect_row_spaces(
        span_matrix(QQ, [(1, 0, 0), (0, 1, 0)], 3),
        span_matrix(QQ, [(0, 1, 0), (0, 0, 1)], 3),
    )
    assert inter.nrows == 1
    assert in_span(inter, (0, 1, 0))


def test_shape_mismatch_raises():
    with pytest.raises(FieldError):
        mat([[1]]) + Matrix(F5, [[1]])
    with pytest.raises(ValueError):
        mat([[1, 2]]) @ mat([[1, 2]])


# --- algebraic laws --------------------------------------------------------

small_entries = st.integers(min_value=-4, max_value=4).map(Fraction)


def matrices(nrows, ncols):
    return st.lists(
        st.lists(small_entries, min_size=ncols, max_size=ncols),
        min_size=nrows, max_size=nrows,
    ).map(lambda rows: Matrix(QQ, rows, ncols))


@settings(max_examples=30, deadline=None, derandomize=True)
@given(matrices(3, 4))
def test_rank_of_transpose(m):
    assert m.rank() == m.transpose().rank()


@settings(max_examples=30, deadline=None, derandomize=True)
@given(matrices(3, 4))
def test_kernel_dimension(m):
    assert len(m.kernel_basis()) == 4 - m.rank()
    for k in m.kernel_basis():
        assert (m @ k).is_zero()


@settings(max_examples=30, deadline=None, derandomize=True)
@given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_matmul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)


@settings(max_examples=30, deadline=None, derandomize=True)
@given(matrices(2, 3))
def test_rref_idempotent(m):
    r, _p = m.rref()
    r2, _p2 = r.rref()
    assert r == r2


@settings(max_examples=30, deadline=None, derandomize=True)
@given(matrices(3, 4), matrices(2, 4))
def test_intersection_contained_in_both(a, b):
    inter = intersect_row_spaces(a, b)
    sa = span_matrix(QQ, a.rows, 4)
    sb = span_matrix(QQ, b.rows, 4)
    for i in range(inter.nrows):
        assert in_span(sa, inter.rows[i])
        assert in_span(sb, inter.rows[i])


@settings(max_examples=30, deadline=None, derandomize=True)
@given(matrices(3, 4))
def test_row_space_basis_spans(m):
    basis = row_space_basis(m)
    sp = span_matrix(QQ, basis, 4)
    assert sp.nrows == m.rank()
    for row in m.rows:
        assert in_span(sp, row)
