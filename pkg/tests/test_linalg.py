"""Exact kernel computations, cross-checked against a naive elimination."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from borelcenter import linalg


def _naive_rank(rows, ncols):
    """Plain fraction Gauss elimination, the independent reference."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][c]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


matrices = st.integers(2, 5).flatmap(
    lambda ncols: st.lists(
        st.lists(st.integers(-5, 5), min_size=ncols, max_size=ncols),
        min_size=1,
        max_size=6,
    ).map(lambda rows: (rows, ncols))
)


@given(matrices)
@settings(max_examples=120)
def test_rational_nullspace_annihilates_and_complements(case):
    rows, ncols = case
    basis = linalg.nullspace_rational(rows, ncols)
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0
    assert len(basis) == ncols - _naive_rank(rows, ncols)
    assert linalg.rank(rows, ncols, 0) == _naive_rank(rows, ncols)


@given(matrices, st.sampled_from([2, 3, 5]))
@settings(max_examples=120)
def test_modp_nullspace(case, p):
    rows, ncols = case
    basis = linalg.nullspace_modp(rows, ncols, p)
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) % p == 0
    assert len(basis) == ncols - linalg.rank(rows, ncols, p)


def test_nullspace_with_fraction_entries():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [3, 1]]
    basis = linalg.nullspace_rational(rows, 2)
    assert basis == []
    rows = [[Fraction(1, 2), Fraction(1, 4)]]
    (vec,) = linalg.nullspace_rational(rows, 2)
    assert vec[0] * Fraction(1, 2) + vec[1] * Fraction(1, 4) == 0


def test_in_span():
    assert linalg.in_span([[1, 0, 1], [0, 1, 1]], [2, 3, 5], 0)
    assert not linalg.in_span([[1, 0, 1], [0, 1, 1]], [0, 0, 1], 0)
    assert linalg.in_span([[1, 1]], [2, 2], 3)
    assert not linalg.in_span([], [1, 0], 2)
