from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from assoc2.exactlin import (
    Matrix,
    Subspace,
    format_rational,
    in_span,
    kernel_basis,
    parse_rational,
    rank,
    solve,
)

F = Fraction

rationals = st.builds(
    Fraction, st.integers(min_value=-30, max_value=30), st.integers(min_value=1, max_value=7)
)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: Matrix(tuple(tuple(x) for x in rows), c))
        )
    )


def test_rank_identity_and_zero():
    assert rank(Matrix.identity(2)) == 2
    assert rank(Matrix.zero(2, 2)) == 0


def test_rank_dependent_rows():
    m = Matrix(((1, 2), (2, 4)))
    assert rank(m) == 1


def test_kernel_zero_map_and_identity():
    assert kernel_basis(Matrix.zero(3, 3)).dim == 3
    assert kernel_basis(Matrix.identity(2)).dim == 0


def test_kernel_dependent():
    ker = kernel_basis(Matrix(((1, 2), (2, 4))))
    assert ker.dim == 1
    (v,) = ker.basis
    assert v[0] + 2 * v[1] == 0 and v != (0, 0)


def test_solve_identity():
    assert solve(Matrix.identity(2), (F(3), F(5))) == (F(3), F(5))


def test_solve_inconsistent():
    assert solve(Matrix.zero(1, 1), (F(1),)) is None


def test_solve_underdetermined():
    m = Matrix(((1, 2), (2, 4)))
    x = solve(m, (F(1), F(2)))
    assert x is not None and x[0] + 2 * x[1] == 1


def test_in_span():
    s = Subspace(2, (((F(1), F(2))),))
    s = Subspace(2, ((F(1), F(2)),))
    assert in_span(s, (F(2), F(4)))
    assert in_span(s, (F(0), F(0)))
    assert not in_span(Subspace(2, ((F(1), F(0)),)), (F(0), F(1)))


def test_subspace_rejects_dependent_basis():
    with pytest.raises(ValueError):
        Subspace(2, ((F(1), F(2)), (F(2), F(4))))


def test_dimension_mismatch_errors():
    with pytest.raises(ValueError):
        solve(Matrix.identity(2), (F(1),))
    with pytest.raises(ValueError):
        in_span(Subspace(2, ()), (F(1),))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).dim == m.cols


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_kernel_vectors_annihilate(m):
    for v in kernel_basis(m).basis:
        assert all(x == 0 for x in m @ v)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_verified_or_certified(m, data):
    b = tuple(data.draw(st.lists(rationals, min_size=m.rows, max_size=m.rows)))
    x = solve(m, b)
    if x is not None:
        assert (m @ x) == tuple(F(v) for v in b)
    else:
        aug = Matrix(tuple(r + (F(v),) for r, v in zip(m.entries, b)), m.cols + 1)
        assert rank(aug) > rank(m)


@settings(max_examples=100, deadline=None)
@given(rationals, rationals)
def test_exact_arithmetic(a, b):
    assert (a + b) - b == a
    if b != 0:
        assert (a * b) / b == a


@settings(max_examples=100, deadline=None)
@given(rationals)
def test_rational_serialization_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_rational_format():
    assert format_rational(F(-3, 4)) == "-3/4"
    assert format_rational(F(5)) == "5"
    assert parse_rational("7/2") == F(7, 2)
    with pytest.raises(ValueError):
        parse_rational("1/-2")
