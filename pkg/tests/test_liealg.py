"""Brackets, adjoint action, Poisson structure, weights."""

from __future__ import annotations

import random

import pytest

from borelcenter.exactalg import Poly, Scalar
from borelcenter.invariants import (
    augmented_minor,
    corner_minor,
    minor_mix,
    trace_poly,
)
from borelcenter.liealg import (
    LieElem,
    NotSemiInvariant,
    Weight,
    adjoint_apply,
    bracket,
    lie_basis,
    poisson,
    weight_of,
    weight_of_pattern,
)


def e(r, c, char=0):
    return Poly.variable(r, c, char)


def unit(n, r, c, char=0):
    return LieElem.unit(n, r, c, char)


def test_bracket_structure_constants():
    assert bracket(unit(3, 1, 2), unit(3, 2, 3)) == unit(3, 1, 3)
    assert bracket(unit(3, 1, 2), unit(3, 1, 1)) == -unit(3, 1, 2)
    x = unit(3, 1, 2) + unit(3, 2, 3).scale(2)
    assert bracket(x, x).is_zero()


def test_bracket_size_mismatch():
    with pytest.raises(ValueError):
        bracket(unit(2, 1, 2), unit(3, 1, 2))


@pytest.mark.parametrize("n", [3, 4, 6])
def test_jacobi_identity_random_triples(n):
    rng = random.Random(100 + n)
    positions = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    for _ in range(1000 if n == 6 else 300):
        a = unit(n, *rng.choice(positions))
        b = unit(n, *rng.choice(positions))
        c = unit(n, *rng.choice(positions))
        total = (
            bracket(a, bracket(b, c))
            + bracket(b, bracket(c, a))
            + bracket(c, bracket(a, b))
        )
        assert total.is_zero()


def test_adjoint_examples():
    # the degree-two invariant of the 3x3 Borel is killed by e(1,2)
    m = augmented_minor(3, 1, 0)
    assert adjoint_apply(unit(3, 1, 2), m).is_zero()
    assert adjoint_apply(unit(3, 1, 1), e(1, 3)) == e(1, 3)
    assert adjoint_apply(unit(3, 2, 3), Poly.one(0)).is_zero()


@pytest.mark.parametrize("n", [3, 4])
def test_adjoint_is_derivation(n):
    rng = random.Random(55 + n)
    positions = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]

    def rand_poly():
        f = Poly.zero(0)
        for _ in range(rng.randint(1, 3)):
            mono = Poly.one(0)
            for _ in range(rng.randint(0, 2)):
                mono = mono * e(*rng.choice(positions))
            f = f + mono.scale(rng.randint(-3, 3))
        return f

    for r, c in positions:
        x = unit(n, r, c)
        for _ in range(5):
            f, g = rand_poly(), rand_poly()
            assert adjoint_apply(x, f * g) == adjoint_apply(x, f) * g + f * adjoint_apply(x, g)


def test_poisson_agrees_with_adjoint_on_linear():
    n = 3
    f = augmented_minor(n, 1, 0) + trace_poly(n, 0) ** 2
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            x = unit(n, i, j)
            assert poisson(x.as_poly(), f) == adjoint_apply(x, f)


def test_poisson_basic_identities():
    f = e(1, 2) * e(2, 3) + e(1, 3)
    assert poisson(f, f).is_zero()
    assert poisson(e(1, 2), e(2, 3)) == e(1, 3)


def test_poisson_sign_convention():
    # bracketing the corner minor against the corner diagonal slot gives
    # minus the minor; the opposite order gives plus.
    for n in (3, 4):
        for k in range(1, n // 2 + 1):
            c = corner_minor(n, k, 0)
            assert poisson(c, e(k, k)) == -c
            assert poisson(e(k, k), c) == c


@pytest.mark.parametrize("n", [3, 4])
def test_poisson_leibniz_and_jacobi(n):
    rng = random.Random(808 + n)
    positions = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    def rand_poly(deg):
        f = Poly.zero(0)
        for _ in range(rng.randint(1, 3)):
            mono = Poly.one(0)
            for _ in range(rng.randint(0, deg)):
                mono = mono * e(*rng.choice(positions))
            f = f + mono.scale(rng.randint(-2, 2))
        return f

    for _ in range(15):
        f, g, h = rand_poly(2), rand_poly(2), rand_poly(2)
        assert poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h)
        assert poisson(f * g, h) == f * poisson(g, h) + poisson(f, h) * g
        total = (
            poisson(f, poisson(g, h))
            + poisson(g, poisson(h, f))
            + poisson(h, poisson(f, g))
        )
        assert total.is_zero()


# -- weights -----------------------------------------------------------------


def test_weight_of_corner_minor():
    w = weight_of(corner_minor(3, 1, 0), 3, "g")
    assert [v.val for v in w.values] == [1, 0, -1]
    assert w == weight_of_pattern(3, 1, 0)


def test_weight_of_trace_is_zero():
    w = weight_of(trace_poly(4, 0), 4, "g")
    assert w.is_zero()


def test_weight_rejects_non_semiinvariant():
    with pytest.raises(NotSemiInvariant):
        weight_of(e(1, 2) + e(1, 1), 3, "g")
    with pytest.raises(ValueError):
        weight_of(Poly.zero(0), 3, "g")


def test_weight_additive_on_products():
    for n in (3, 4, 5):
        c = corner_minor(n, 1, 0)
        m = augmented_minor(n, 1, 0)
        assert weight_of(c * m, n, "g") == weight_of(c, n, "g") + weight_of(m, n, "g")


@pytest.mark.parametrize("n,k", [(3, 1), (4, 1), (5, 1), (5, 2), (6, 1), (6, 2)])
def test_augmented_and_corner_share_weight(n, k):
    assert weight_of(augmented_minor(n, k, 0), n, "g") == weight_of_pattern(n, k, 0)
    assert weight_of(corner_minor(n, k, 0), n, "g") == weight_of_pattern(n, k, 0)


def test_sl_weights_use_eps_basis():
    w = weight_of(corner_minor(3, 1, 0), 3, "b")
    # eps values are the e(s,s) values shifted by the last slot
    assert [v.val for v in w.values] == [2, 1]


# -- ordered bases ------------------------------------------------------------


def test_basis_orders():
    g3 = lie_basis("g", 3)
    assert g3.labels[:4] == (("e", 1, 1), ("e", 1, 2), ("e", 1, 3), ("e", 2, 2))
    b3 = lie_basis("b", 3)
    assert b3.labels[:2] == (("eps", 1), ("eps", 2))
    assert len(b3) == 5


@pytest.mark.parametrize("algebra,n", [("g", 3), ("g", 4), ("b", 3), ("b", 4)])
def test_basis_bracket_matches_lie_elements(algebra, n):
    basis = lie_basis(algebra, n)
    for a in range(len(basis)):
        for b in range(len(basis)):
            expanded = LieElem(n, 0)
            for idx, coeff in basis.bracket(a, b):
                expanded = expanded + basis.elem_of(idx, 0).scale(coeff)
            assert expanded == bracket(basis.elem_of(a, 0), basis.elem_of(b, 0))


def test_membership_predicates():
    x = unit(3, 1, 2) + unit(3, 1, 1)
    assert x.in_upper_borel() and not x.in_sl_borel()
    assert LieElem.eps(3, 1, 0).in_sl_borel()
    assert not unit(3, 2, 1).in_upper_borel()


def test_weight_class_addition():
    a = Weight("g", (Scalar.of(1, 0), Scalar.of(0, 0)))
    b = Weight("g", (Scalar.of(2, 0), Scalar.of(-1, 0)))
    assert (a + b).values[0].val == 3
    with pytest.raises(ValueError):
        a + Weight("b", (Scalar.of(1, 0),))
