"""The brute-force verification layer against known closed forms."""

from __future__ import annotations

from fractions import Fraction

import pytest

from borelcenter.enveloping import gr_map
from borelcenter.exactalg import Poly, frobenius_coords
from borelcenter.invariants import (
    augmented_minor,
    augmented_minor_sl,
    center_product,
    corner_minor,
    mid_index,
    minor_mix,
    trace_poly,
)
from borelcenter.oracle import (
    NotPIntegral,
    TooLarge,
    center_jacobian_spec,
    center_space_U,
    free_module_graded_dims,
    invariant_space,
    jacobian_check,
    reduce_mod_p,
    semicenter_jacobian_spec,
    semiinvariant_space,
    separating_report,
    space_contains,
)


def e(r, c, char=0):
    return Poly.variable(r, c, char)


# -- invariant spaces -----------------------------------------------------------


def test_degree_zero_is_constants():
    sp = invariant_space(3, 0, "g", "g", 0)
    assert sp.dim == 1 and sp.basis[0] == Poly.one(0)


def test_char0_center_is_trace_line():
    sp = invariant_space(3, 0, "g", "g", 1)
    assert sp.dim == 1
    assert space_contains(sp, trace_poly(3, 0))
    for n in (2, 3, 4):
        for d in range(5):
            assert invariant_space(n, 0, "g", "g", d).dim == 1


def test_char0_sl_center_trivial():
    assert invariant_space(3, 0, "b", "b", 0).dim == 1
    for d in range(1, 5):
        assert invariant_space(3, 0, "b", "b", d).dim == 0


def test_char2_center_slice_matches_module_count():
    # free-module count: p-th powers in six variables, module basis in
    # degrees {0, 1, 3, 4} (trace powers times the degree-3 product)
    want = free_module_graded_dims([2] * 6, 3, [0, 1, 3, 4])
    assert want == [1, 1, 6, 7]
    got = [invariant_space(3, 2, "g", "g", d).dim for d in range(4)]
    assert got == want


def test_generators_inside_kernel():
    for n, p in ((3, 2), (4, 2), (3, 3)):
        for k in range(1, mid_index(n) + 1):
            for l in range(p):
                f = center_product(n, k, l, p)
                sp = invariant_space(n, p, "g", "g", f.degree())
                assert space_contains(sp, f)


def test_split_and_dense_agree():
    for char in (0, 2):
        for d in range(4):
            a = invariant_space(3, char, "g", "n", d, split=True)
            b = invariant_space(3, char, "g", "n", d, split=False)
            assert a.dim == b.dim


def test_semiinvariant_dims_char0():
    dims = [sum(s.dim for _, s in semiinvariant_space(3, 0, d)) for d in range(4)]
    assert dims == [1, 2, 4, 6]
    dims_b = [
        sum(s.dim for _, s in semiinvariant_space(3, 0, d, ring="b"))
        for d in range(4)
    ]
    assert dims_b == [1, 1, 2, 2]
    assert free_module_graded_dims([1, 1, 2], 3) == [1, 2, 4, 6]
    assert free_module_graded_dims([1, 2], 3) == [1, 1, 2, 2]


def test_semiinvariant_weights_sum_to_nilpotent_kernel():
    for char in (0, 2):
        for d in range(4):
            pieces = semiinvariant_space(3, char, d)
            total = sum(s.dim for _, s in pieces)
            dense = invariant_space(3, char, "g", "n", d, split=False).dim
            assert total == dense
            for w, s in pieces:
                assert s.dim > 0


def test_weight_zero_piece_is_center_in_char0():
    pieces = semiinvariant_space(3, 0, 2)
    zero = [s for w, s in pieces if w.is_zero()]
    assert len(zero) == 1 and zero[0].dim == 1
    assert space_contains(zero[0], trace_poly(3, 0) ** 2)


def test_scale_guard_trips():
    with pytest.raises(TooLarge):
        invariant_space(4, 0, "g", "g", 4, guard=10)
    with pytest.raises(TooLarge):
        center_space_U(3, 0, 3, guard=10)


# -- enveloping center oracle ------------------------------------------------------


def test_env_center_char0_dims():
    for n in (2, 3):
        for d in range(4):
            basis = center_space_U(n, 0, d)
            assert len(basis) == d + 1


def test_env_center_char0_is_trace_algebra():
    got = center_space_U(2, 0, 2)
    polys = sorted((gr_map(u) for u in got if not u.is_zero()),
                   key=lambda f: f.degree())
    assert polys[0].degree() == 0
    # top gradings are powers of the trace
    tr = trace_poly(2, 0)
    for d, f in enumerate(polys):
        assert f.scale(next(iter(f.terms.values())).inverse()) == (
            tr**d
        ).scale(next(iter((tr**d).terms.values())).inverse())


def test_env_center_matches_graded_dims_char2():
    # filtration slice dims accumulate the commutative graded dims
    want_graded = [invariant_space(3, 2, "g", "g", d).dim for d in range(3)]
    for d in range(3):
        got = len(center_space_U(3, 2, d))
        assert got == sum(want_graded[: d + 1]), (d, got, want_graded)


# -- Jacobian identities -------------------------------------------------------------


@pytest.mark.parametrize("n,p", [(3, 2), (3, 3), (5, 2)])
def test_center_jacobian_exact(n, p):
    spec = center_jacobian_spec(n, p)
    assert len(spec.phi) == len(spec.x)
    assert jacobian_check(spec).ok


@pytest.mark.parametrize("n,p", [(3, 2), (3, 3), (5, 2), (5, 3)])
def test_center_jacobian_variants(n, p):
    for k in range(1, mid_index(n) + 1):
        assert jacobian_check(center_jacobian_spec(n, p, variant=k)).ok


@pytest.mark.parametrize("n,p", [(3, 2), (4, 2), (3, 3), (4, 3)])
def test_semicenter_jacobian(n, p):
    assert jacobian_check(semicenter_jacobian_spec(n, p)).ok
    for k in range(1, mid_index(n) + 1):
        assert jacobian_check(semicenter_jacobian_spec(n, p, variant=k)).ok


def test_jacobian_check_is_not_vacuous():
    # a tampered spec (wrong variable order pairing) must fail
    spec = center_jacobian_spec(3, 3)
    broken = type(spec)(
        spec.which, spec.n, spec.p, spec.variant, spec.phi,
        tuple(reversed(spec.x)),
    )
    assert not jacobian_check(broken).ok


def test_center_jacobian_frobenius_form():
    # the closed form, stated with p-th-power exponents, compresses to the
    # determinant's coordinates
    n, p = 3, 3
    c = corner_minor(n, 1, p)
    stated = (-Poly.one(p)) * c ** (2 * p * (p - 1))
    compressed = frobenius_coords(stated, p)
    assert compressed == (-Poly.one(p)) * c ** (2 * (p - 1))


# -- separating facts -------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("char", [0, 2, 3])
def test_separating_facts_all_hold(n, char):
    facts = separating_report(n, char)
    assert facts
    bad = [f for f in facts if not f.ok]
    assert not bad, bad


def test_separating_fact_values():
    from borelcenter.liealg import poisson
    from borelcenter.invariants import col_replaced_minor, row_replaced_minor

    # the column-replaced minor pairs with the top anti-diagonal element
    got = poisson(col_replaced_minor(3, 1, 1, 1, 0), e(1, 3))
    assert got == e(3, 3) - e(1, 1)
    # ... while the printed pairing with the below-diagonal element vanishes
    assert poisson(col_replaced_minor(3, 1, 1, 2, 0), e(2, 3)).is_zero()
    # the row-replaced minor pairs with its element above the diagonal
    assert poisson(row_replaced_minor(3, 1, 1, 2, 0), e(1, 2)) == -e(1, 3)


# -- reduction mod p -----------------------------------------------------------------


def test_reduce_mod_p_trace():
    assert reduce_mod_p(trace_poly(3, 0), 2) == trace_poly(3, 2)


def test_reduce_mod_p_sl_generator():
    # both construction paths: build over the rationals then reduce, or
    # build directly over the prime field
    got = reduce_mod_p(augmented_minor_sl(5, 1, 0), 3)
    assert got == augmented_minor_sl(5, 1, 3)


def test_reduce_mod_p_rejects_bad_denominator():
    f = trace_poly(2, 0).scale(Fraction(1, 2))
    with pytest.raises(NotPIntegral):
        reduce_mod_p(f, 2)
    with pytest.raises(ValueError):
        reduce_mod_p(trace_poly(2, 2), 2)


@pytest.mark.parametrize("n,p", [(3, 2), (4, 3), (5, 2)])
def test_reduce_commutes_with_constructors(n, p):
    for k in range(1, mid_index(n) + 1):
        assert reduce_mod_p(corner_minor(n, k, 0), p) == corner_minor(n, k, p)
        assert reduce_mod_p(minor_mix(n, k, 0), p) == minor_mix(n, k, p)
        assert reduce_mod_p(augmented_minor(n, k, 0), p) == augmented_minor(n, k, p)
        for l in range(p):
            rational = (corner_minor(n, k, 0) ** (p - l)
                        * augmented_minor(n, k, 0) ** l)
            assert reduce_mod_p(rational, p) == center_product(n, k, l, p)
