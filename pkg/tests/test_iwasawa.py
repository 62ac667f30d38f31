"""ell-adic completion and Weierstrass invariants.

The `LINK_MATRIX` values were produced by the exact extraction pipeline and
double-checked against the valuation ledger
d*ell^v(a p'q') - ell^v(a p') - ell^v(a q') + 1 with a = |alpha|, which
follows from completing each binomial factor separately.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toruslink.alexander import admissible_vector, torus_params
from toruslink.arith import padic_valuation
from toruslink.errors import KnotCase, LinkCase, ZeroAlpha, ZeroInput
from toruslink.iwasawa import (
    NU_ABSOLUTE,
    NU_NOT_APPLICABLE,
    NU_RELATIVE,
    complete_at_ell,
    knot_invariants,
    lambda_decomposition_check,
    link_invariants,
    link_mu_lambda,
    weierstrass_mu_lambda,
)
from toruslink.polyring import geometric


def binom_expand(coeffs):
    """Oracle: substitute X -> 1 + T with exact Pascal rows."""
    out = [0] * len(coeffs)
    for k, c in enumerate(coeffs):
        row = [math.comb(k, j) for j in range(k + 1)]
        for j, b in enumerate(row):
            out[j] += c * b
    while out and out[-1] == 0:
        out.pop()
    return out


def test_completion_examples():
    assert list(complete_at_ell([-1, 1], 2).coeffs) == [0, 1]
    assert list(complete_at_ell([1, -1, 1], 3).coeffs) == [1, 1, 1]
    assert list(complete_at_ell([-1, 0, 0, 0, 1], 5).coeffs) == [0, 4, 6, 4, 1]
    with pytest.raises(ZeroInput):
        complete_at_ell([], 2)


@settings(max_examples=60)
@given(st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=8).filter(any),
       st.sampled_from([2, 3, 5]))
def test_completion_matches_pascal_oracle(f, ell):
    assert list(complete_at_ell(f, ell).coeffs) == binom_expand(f)


def test_weierstrass_examples():
    assert weierstrass_mu_lambda(complete_at_ell([1, 1, 1], 2)) == (0, 0)
    g = complete_at_ell([1, -1, 1], 2)
    assert weierstrass_mu_lambda(g) == (0, 0)

    class Fake:
        def __init__(self, ell, coeffs):
            self.ell = ell
            self.coeffs = tuple(coeffs)

    assert weierstrass_mu_lambda(Fake(2, (8, 4, 2))) == (1, 2)
    assert weierstrass_mu_lambda(Fake(3, (3, 3, 3, 1))) == (0, 3)
    with pytest.raises(ZeroInput):
        weierstrass_mu_lambda(Fake(2, ()))


@settings(max_examples=30)
@given(st.integers(min_value=1, max_value=100), st.sampled_from([2, 3, 5]))
def test_binomial_factor_ledger(k, ell):
    """mu and lambda of X^k - 1 read off the k-th binomial alone."""
    g = geometric(k)  # (X^k - 1)/(X - 1)
    mu, lam = weierstrass_mu_lambda(complete_at_ell(g, ell))
    assert (mu, lam) == (0, ell ** padic_valuation(ell, k) - 1)


def test_knot_invariants_vanish():
    for pq, ell in [((2, 3), 2), ((3, 5), 3), ((4, 9), 5), ((2, 9), 3)]:
        inv = knot_invariants(torus_params(*pq), ell)
        assert (inv.mu, inv.lam, inv.nu) == (0, 0, 0)
        assert inv.nu_kind == NU_ABSOLUTE
    with pytest.raises(LinkCase):
        knot_invariants(torus_params(2, 4), 2)


# (p, q), z, ell -> (lambda, nu, nu_kind); mu is 0 everywhere
LINK_MATRIX = {
    ((2, 4), (1, 1), 2): (3, None, NU_NOT_APPLICABLE),
    ((2, 4), (1, 1), 3): (1, 0, NU_RELATIVE),
    ((2, 4), (1, 1), 5): (1, 0, NU_RELATIVE),
    ((2, 4), (1, 2), 2): (2, -2, NU_RELATIVE),
    ((2, 4), (1, 2), 3): (1, 0, NU_RELATIVE),
    ((2, 4), (1, 2), 5): (1, 0, NU_RELATIVE),
    ((2, 6), (1, 1), 2): (1, 0, NU_RELATIVE),
    ((2, 6), (1, 1), 3): (3, None, NU_NOT_APPLICABLE),
    ((2, 6), (1, 1), 5): (1, 0, NU_RELATIVE),
    ((2, 6), (1, 2), 2): (1, -1, NU_RELATIVE),
    ((2, 6), (1, 2), 3): (7, None, NU_NOT_APPLICABLE),
    ((2, 6), (1, 2), 5): (1, 0, NU_RELATIVE),
    ((3, 3), (1, 1, 1), 2): (2, 0, NU_RELATIVE),
    ((3, 3), (1, 1, 1), 3): (4, None, NU_NOT_APPLICABLE),
    ((3, 3), (1, 1, 1), 5): (2, 0, NU_RELATIVE),
    ((3, 3), (1, 2, 1), 2): (5, None, NU_NOT_APPLICABLE),
    ((3, 3), (1, 2, 1), 3): (2, 0, NU_RELATIVE),
    ((3, 3), (1, 2, 1), 5): (2, 0, NU_RELATIVE),
    ((3, 6), (1, 1, 1), 2): (4, None, NU_NOT_APPLICABLE),
    ((3, 6), (1, 1, 1), 3): (4, None, NU_NOT_APPLICABLE),
    ((3, 6), (1, 1, 1), 5): (2, 0, NU_RELATIVE),
    ((3, 6), (1, 2, 1), 2): (13, None, NU_NOT_APPLICABLE),
    ((3, 6), (1, 2, 1), 3): (2, 0, NU_RELATIVE),
    ((3, 6), (1, 2, 1), 5): (2, 0, NU_RELATIVE),
    ((4, 4), (1, 1, 1, 1), 2): (9, None, NU_NOT_APPLICABLE),
    ((4, 4), (1, 1, 1, 1), 3): (3, 0, NU_RELATIVE),
    ((4, 4), (1, 1, 1, 1), 5): (3, 0, NU_RELATIVE),
    ((4, 4), (1, 2, 1, 2), 2): (5, -5, NU_RELATIVE),
    ((4, 4), (1, 2, 1, 2), 3): (7, None, NU_NOT_APPLICABLE),
    ((4, 4), (1, 2, 1, 2), 5): (3, 0, NU_RELATIVE),
    ((4, 6), (1, 1), 2): (3, None, NU_NOT_APPLICABLE),
    ((4, 6), (1, 1), 3): (3, None, NU_NOT_APPLICABLE),
    ((4, 6), (1, 1), 5): (1, 0, NU_RELATIVE),
    ((4, 6), (1, 2), 2): (2, -2, NU_RELATIVE),
    ((4, 6), (1, 2), 3): (7, None, NU_NOT_APPLICABLE),
    ((4, 6), (1, 2), 5): (1, 0, NU_RELATIVE),
}


def valuation_ledger_lambda(params, z, ell):
    a = abs(sum(z))
    return (
        params.d * ell ** padic_valuation(ell, a * params.p_prime * params.q_prime)
        - ell ** padic_valuation(ell, a * params.p_prime)
        - ell ** padic_valuation(ell, a * params.q_prime)
        + 1
    )


@pytest.mark.parametrize("key", sorted(LINK_MATRIX))
def test_link_matrix_entry(key):
    (p, q), z, ell = key
    lam_expected, nu_expected, kind = LINK_MATRIX[key]
    P = torus_params(p, q)
    mu, lam = link_mu_lambda(P, z, ell)
    assert mu == 0
    assert lam == lam_expected
    assert lam == valuation_ledger_lambda(P, z, ell)
    inv = link_invariants(P, z, ell)
    assert (inv.mu, inv.lam) == (0, lam_expected)
    assert inv.nu_kind == kind
    assert inv.nu == nu_expected
    assert lambda_decomposition_check(P, z, ell)


def test_link_matrix_alpha_handling():
    # negative entries fold through |alpha|
    P = torus_params(2, 6)
    assert admissible_vector(P, (1, -3)).alpha == -2
    mu, lam = link_mu_lambda(P, (1, -3), 2)
    assert mu == 0 and lam == valuation_ledger_lambda(P, (1, -3), 2)
    assert lambda_decomposition_check(P, (1, -3), 2)


def test_link_invariants_guards():
    with pytest.raises(KnotCase):
        link_invariants(torus_params(2, 3), (1,), 2)
    with pytest.raises(ZeroAlpha):
        link_invariants(torus_params(2, 4), (1, -1), 2)
    with pytest.raises(ValueError):
        # explicit window too small to fit three stabilized points
        link_invariants(torus_params(2, 4), (1, 2), 2, n_max=2)


def test_nu_fit_window_is_exactly_affine():
    # lambda = 1 towers stabilize immediately: valuation grows by 1 per level
    inv = link_invariants(torus_params(2, 4), (1, 1), 3)
    assert (inv.mu, inv.lam, inv.nu, inv.nu_kind) == (0, 1, 0, NU_RELATIVE)
