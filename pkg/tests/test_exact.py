from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import F, sympy_rank

from trusskit.exact import (
    RMat,
    Subspace,
    dot,
    format_rat,
    null_space,
    orthogonal_complement,
    parse_rat,
    primitive_integer,
    rank,
    rref,
    solve_particular,
)

small = st.integers(-3, 3).map(Fraction)
fractions_ = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def matrices(draw, max_rows=5, max_cols=5, elements=small):
    m = draw(st.integers(1, max_rows))
    n = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(elements, min_size=n, max_size=n), min_size=m, max_size=m))
    return RMat.from_rows(rows, n)


# --- scalars ---


@pytest.mark.parametrize("text, value", [("3/4", Fraction(3, 4)), ("-7", Fraction(-7)), (" 2 / -6 ", Fraction(-1, 3)), (5, Fraction(5))])
def test_parse_rat_accepts_exact_forms(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("bad", ["0.5", "1e3", 0.5, "1/0", "", "a/b", True])
def test_parse_rat_rejects_inexact_or_malformed(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


@given(fractions_)
def test_format_parse_round_trip(q):
    assert parse_rat(format_rat(q)) == q


# --- rref and null spaces ---


def test_rref_small_example():
    M = RMat.from_rows([F(1, 2, 3), F(2, 4, 7)])
    R, pivots, r = rref(M)
    assert r == 2 and pivots == [0, 2]
    assert R.rows == (F(1, 2, 0), F(0, 0, 1))


def test_null_space_of_homogeneous_example():
    A = RMat.from_rows([F(1, 0, 1, -2, 1), F(1, -1, -1, 2, 1), F(-1, 2, 2, -3, 1)])
    expected = Subspace([F(1, 2, -3, -1, 0), F(0, 2, -7, -3, 1)], 5)
    assert null_space(A) == expected


def test_orthogonal_complement_of_nothing_is_everything():
    assert orthogonal_complement([], 3) == Subspace.full(3)
    assert orthogonal_complement([F(1, 0, 0), F(0, 1, 0), F(0, 0, 1)], 3) == Subspace.zero(3)


def test_subspace_rejects_dependent_basis():
    with pytest.raises(ValueError):
        Subspace([F(1, 2), F(2, 4)], 2)


def test_subspace_equality_ignores_basis_choice():
    a = Subspace([F(1, 1, 0), F(0, 1, 1)], 3)
    b = Subspace([F(1, 2, 1), F(1, 0, -1)], 3)
    assert a == b and hash(a) == hash(b)
    assert Subspace([F(1, 0, 0)], 3) != a


def test_coordinates_and_projection():
    S = Subspace([F(1, 1, 0)], 3)
    assert S.coordinates(F(3, 3, 0)) == F(3)
    with pytest.raises(ValueError):
        S.coordinates(F(1, 0, 0))
    p = S.project_out(F(2, 0, 5))
    assert p == F(1, -1, 5)
    assert dot(p, F(1, 1, 0)) == 0


def test_primitive_integer():
    assert primitive_integer(F("1/2", "-3/4", 0)) == (2, -3, 0)
    with pytest.raises(ValueError):
        primitive_integer(F(0, 0))


def test_solve_particular_reports_incompatibility():
    A = RMat.from_rows([F(1, 1), F(2, 2)])
    assert solve_particular(A, F(1, 3)) is None
    assert solve_particular(A, F(1, 2)) == F(1, 0)


# --- properties ---


@settings(max_examples=50, deadline=None)
@given(matrices(elements=fractions_))
def test_rank_nullity(M):
    N = null_space(M)
    assert rank(M) + N.dim == M.ncols
    for v in N.basis:
        assert all(x == 0 for x in M @ v)
    assert rank(M) == sympy_rank(M.rows, M.ncols)


@settings(max_examples=50, deadline=None)
@given(matrices())
def test_complement_is_orthogonal_and_complementary(M):
    S = Subspace.span(M.rows, M.ncols)
    C = S.complement()
    assert S.dim + C.dim == M.ncols
    assert all(dot(u, v) == 0 for u in S.basis for v in C.basis)
    assert C.complement() == S


@settings(max_examples=50, deadline=None)
@given(matrices())
def test_rref_is_reduced(M):
    R, pivots, r = rref(M)
    assert len(pivots) == r
    for i, pc in enumerate(pivots):
        assert R.rows[i][pc] == 1
        assert all(R.rows[k][pc] == 0 for k in range(R.nrows) if k != i)
        assert all(x == 0 for x in R.rows[i][:pc])
    assert all(x == 0 for row in R.rows[r:] for x in row)
    assert pivots == sorted(pivots)
    # same row space
    assert Subspace.span(M.rows, M.ncols) == Subspace.span(R.rows, M.ncols)
