import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import series_residue, span_reducer
from uinfty.exact import binom
from uinfty.fock import FockVector, alphas, basis, l_minus_one, l_zero, vacuum
from uinfty.grmod import gr_basis, theta_apply
from uinfty.oracle import in_qinf
from uinfty.props import basis_upto, check_corollary_kl
from uinfty.uinf import (
    ShiftError,
    UElement,
    circ_n,
    diamond,
    entry,
    j_gen,
    l_gen,
    o_infty_gen,
    o_n_span,
    shift_diag,
    star_n,
)

VAC = vacuum()
A1 = alphas(1)
SMALL = basis_upto(2)


def series_circ(u, v, n):
    return series_residue(u, v, -2 * n - 2, u.homogeneous_weight() + n)


def series_star(u, v, n):
    out = FockVector()
    for m in range(n + 1):
        out = out + series_residue(u, v, -n - m - 1, u.homogeneous_weight() + n).scale((-1) ** m * binom(m + n, n))
    return out


# -- circ and star -------------------------------------------------------------


def test_circ_examples():
    assert circ_n(VAC, A1, 0) == FockVector()
    assert circ_n(A1, VAC, 0) == alphas(2) + A1
    for n in range(4):
        assert circ_n(VAC, VAC, n) == FockVector()


@pytest.mark.parametrize("n", range(3))
def test_circ_matches_series(n):
    for pu, pv in itertools.product(basis_upto(3), SMALL):
        u, v = basis(pu), basis(pv)
        assert circ_n(u, v, n) == series_circ(u, v, n)


@pytest.mark.parametrize("n", range(3))
def test_star_matches_series(n):
    for pu, pv in itertools.product(basis_upto(3), SMALL):
        u, v = basis(pu), basis(pv)
        assert star_n(u, v, n) == series_star(u, v, n)


def test_star_examples():
    assert star_n(A1, A1, 0) == alphas(1, 1)
    # frozen from the series expansion of *_1
    assert star_n(A1, A1, 1) == alphas(2, 1).scale(-3) + alphas(3, 1).scale(-2)
    for n in range(4):
        for p in basis_upto(3):
            v = basis(p)
            assert star_n(VAC, v, n) == v
            # on the right the vacuum is an identity only modulo O_n
            assert in_qinf(entry(star_n(v, VAC, n) - v, n, n)).member


def test_star_levels_agree_modulo_o0():
    # u *_1 v - u *_0 v must act as zero on the degree-0 part of every module
    for pu, pv in itertools.product(SMALL, SMALL):
        u, v = basis(pu), basis(pv)
        diff = star_n(u, v, 1) - star_n(u, v, 0)
        assert in_qinf(entry(diff, 0, 0)).member


# -- diamond -------------------------------------------------------------------


def test_diamond_off_diagonal_vanishes():
    assert diamond(entry(A1, 0, 1), entry(A1, 2, 1)) == UElement()
    for k, m, n, l in itertools.product(range(3), repeat=4):
        if m != n:
            assert diamond(entry(alphas(2), k, m), entry(A1, n, l)).is_zero()


@pytest.mark.parametrize("n", range(4))
def test_diamond_coincides_with_star(n):
    for pu, pv in itertools.product(basis_upto(2), basis_upto(2)):
        u, v = basis(pu), basis(pv)
        assert diamond(entry(u, n, n), entry(v, n, n)) == entry(star_n(u, v, n), n, n)


def test_diamond_example_level_one():
    expected = alphas(2, 1).scale(-3) + alphas(3, 1).scale(-2)
    assert diamond(entry(A1, 1, 1), entry(A1, 1, 1)) == entry(expected, 1, 1)


def test_diamond_bilinear():
    a = entry(A1, 1, 1) + entry(alphas(2), 0, 1)
    b = entry(alphas(1, 1), 1, 2).scale(3) + entry(VAC, 1, 0)
    total = UElement()
    for (k, m), u in a:
        for (n, l), v in b:
            total = total + diamond(entry(u, k, m), entry(v, n, l))
    assert diamond(a, b) == total
    assert diamond(a.scale(2), b) == diamond(a, b).scale(2)


# -- generator families --------------------------------------------------------


@pytest.mark.parametrize("k, l, p", list(itertools.product(range(3), repeat=3)))
def test_o_infty_gen_with_vacuum(k, l, p):
    v = alphas(2, 1)
    # only i = k+l+p+1 survives, with coefficient C(l, k+l+p+1) = 0
    assert o_infty_gen(VAC, v, k, l, p) == entry(v.scale(binom(l, k + l + p + 1)), k, l)
    assert o_infty_gen(VAC, v, k, l, p).is_zero()


def test_o_infty_gen_reduces_to_circ():
    assert o_infty_gen(A1, VAC, 0, 0, 0) == entry(alphas(2) + A1, 0, 0)
    for pu, pv in itertools.product(SMALL, SMALL):
        u, v = basis(pu), basis(pv)
        assert o_infty_gen(u, v, 0, 0, 0) == entry(circ_n(u, v, 0), 0, 0)


def test_o_infty_gen_rejects_negative():
    with pytest.raises(ValueError):
        o_infty_gen(A1, A1, -1, 0, 0)


def test_o_infty_generators_are_in_q():
    for pu, pv in itertools.product(SMALL, SMALL):
        for k, l, p in itertools.product(range(3), range(3), range(2)):
            assert in_qinf(o_infty_gen(basis(pu), basis(pv), k, l, p)).member


def test_l_gen_examples():
    for k in range(4):
        assert l_gen(VAC, k, k).is_zero()
    assert l_gen(A1, 0, 0) == entry(alphas(2) + A1, 0, 0)
    v = alphas(2, 1)
    assert l_gen(v, 2, 1) == entry(l_minus_one(v) + l_zero(v) - v, 2, 1)


def test_l_gen_in_q():
    for p in basis_upto(3):
        for k, l in itertools.product(range(4), repeat=2):
            assert in_qinf(l_gen(basis(p), k, l)).member


@pytest.mark.parametrize("k, l, p, n", [(1, 1, 0, 1), (0, 2, 0, 0), (2, 0, 1, -1), (1, 3, -2, 2)])
def test_j_gen_vacuum_acts_trivially(k, l, p, n):
    e = j_gen(VAC, VAC, k, l, p, n)
    for cls in gr_basis(l + p):
        assert theta_apply(e, cls).is_zero()


def test_j_gen_example_in_q():
    e = j_gen(A1, A1, 1, 1, 0, 1)
    assert in_qinf(e).member
    assert in_qinf(shift_diag(e)).member


def test_j_gen_nontrivial_members():
    seen_nonzero = 0
    for pu, pv in itertools.product(SMALL, SMALL):
        for k, n, p in itertools.product(range(1, 3), range(-2, 3), range(-2, 3)):
            e = j_gen(basis(pu), basis(pv), k, 1 - p, p, n)
            seen_nonzero += not e.is_zero()
            assert e.support() in ([], [(k, 1)])
            assert in_qinf(e).member
    assert seen_nonzero > 100


def test_j_gen_validation():
    with pytest.raises(ValueError):
        j_gen(A1, A1 + alphas(2), 1, 1, 0, 0)
    with pytest.raises(ValueError):
        j_gen(A1, A1, -1, 1, 0, 0)
    with pytest.raises(ValueError):
        j_gen(A1, A1, 1, 1, -2, 0)


# -- diagonal shift -----------------------------------------------------------


def test_shift_diag_examples():
    v, w = alphas(2), A1
    assert shift_diag(entry(v, 1, 1)) == entry(v, 0, 0)
    assert shift_diag(entry(v, 2, 3) + entry(w, 1, 1)) == entry(v, 1, 2) + entry(w, 0, 0)
    with pytest.raises(ShiftError):
        shift_diag(entry(v, 0, 1))
    with pytest.raises(ShiftError):
        shift_diag(entry(v, 2, 0))


# -- propositions on products --------------------------------------------------


def test_mult_examples():
    for u, v, k, i, l in [(VAC, VAC, 1, 1, 1), (A1, A1, 1, 1, 1), (alphas(2), alphas(1, 1), 2, 1, 1)]:
        lower = diamond(entry(u, k - 1, i - 1), entry(v, i - 1, l - 1))
        upper = shift_diag(diamond(entry(u, k, i), entry(v, i, l)))
        assert in_qinf(lower - upper).member


def test_mult0_example():
    for k, l in itertools.product(range(1, 3), repeat=2):
        assert in_qinf(shift_diag(diamond(entry(A1, k, 0), entry(alphas(2), 0, l)))).member


def test_corollary_kl():
    assert all(r.passed for r in check_corollary_kl(max_weight=2, max_index=3))


# -- level-n Zhu ideal ---------------------------------------------------------


def test_o_n_span_examples():
    span0 = o_n_span(0, 1)
    assert alphas(2) + A1 in span0
    assert sum(1 for v in span0 if v == alphas(2) + A1) == 2
    assert all(v for v in o_n_span(2, 2))


def test_o_n_span_deterministic():
    assert o_n_span(1, 3) == o_n_span(1, 3)


def test_o1_inside_o0():
    reduce = span_reducer(o_n_span(0, 6))
    for v in o_n_span(1, 4):
        assert reduce(v) == {}


def test_o0_not_inside_o1():
    # sanity check of the reducer: alpha(-1)|0> lies in neither span
    reduce = span_reducer(o_n_span(0, 6))
    assert reduce(A1) != {}


@given(st.sampled_from(SMALL), st.sampled_from(SMALL), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
@settings(max_examples=40, deadline=None)
def test_o_infty_gen_satisfies_shift(pu, pv, k, l, p):
    e = o_infty_gen(basis(pu), basis(pv), k + 1, l + 1, p)
    assert in_qinf(e).member and in_qinf(shift_diag(e)).member
