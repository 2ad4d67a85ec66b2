"""Orthogonal polynomials and hypergeometric partial sums against classical
closed forms, scipy's evaluators, and each other."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose
from scipy.special import eval_genlaguerre, eval_hermite, eval_jacobi, gammaln

from bargmann import (
    HypSeriesError,
    basis_eval,
    basis_matrix,
    beta,
    gamma_ratio,
    gauss_halfline,
    gauss_line,
    hermite,
    hermite_l2,
    hermite_sequence,
    hyp1f1,
    hyp2f1,
    hyp3f2,
    hyp_series,
    jacobi,
    jacobi_sequence,
    laguerre,
    laguerre_l2,
    laguerre_sequence,
    log_gamma,
    pochhammer,
)


def test_hermite_low_orders_explicit():
    # H_0..H_3 written out: 1, 2x, 4x^2 - 2, 8x^3 - 12x.
    x = np.linspace(-2.5, 2.5, 11)
    H = hermite_sequence(3, x)
    assert_allclose(H[:, 0], np.ones_like(x))
    assert_allclose(H[:, 1], 2.0 * x)
    assert_allclose(H[:, 2], 4.0 * x**2 - 2.0)
    assert_allclose(H[:, 3], 8.0 * x**3 - 12.0 * x)


def test_hermite_matches_scipy():
    x = np.linspace(-3.0, 3.0, 9)
    for j in (0, 1, 5, 12, 25):
        assert_allclose(hermite(j, x), eval_hermite(j, x), rtol=1e-12)


def test_laguerre_low_orders_explicit():
    x = np.linspace(0.0, 6.0, 7)
    for a in (0.0, 0.5, 2.0):
        L = laguerre_sequence(2, a, x)
        assert_allclose(L[:, 0], np.ones_like(x))
        assert_allclose(L[:, 1], a + 1.0 - x)
        assert_allclose(L[:, 2], 0.5 * x**2 - (a + 2.0) * x + 0.5 * (a + 1.0) * (a + 2.0))


def test_laguerre_matches_scipy():
    x = np.linspace(0.0, 20.0, 11)
    for a in (0.0, 0.5, 1.5, 4.0):
        for j in (1, 3, 10, 30):
            assert_allclose(laguerre(j, a, x), eval_genlaguerre(j, a, x),
                            rtol=1e-10, atol=1e-12)


def test_laguerre_is_terminating_kummer_series():
    # L_n^(a)(x) = binom(n+a, n) 1F1(-n; a+1; x)
    x = np.array([0.3, 1.7, 5.2])
    for n in (0, 2, 7):
        for a in (0.0, 0.5, 2.5):
            binom = np.exp(gammaln(n + a + 1.0) - gammaln(n + 1.0) - gammaln(a + 1.0))
            kummer = np.array([hyp1f1(-n, a + 1.0, xv) for xv in x])
            assert_allclose(laguerre(n, a, x), binom * kummer, rtol=1e-12)


def test_jacobi_matches_scipy():
    x = np.linspace(-0.9, 0.9, 7)
    for a, b in ((0.0, 0.0), (0.5, 1.5), (2.0, 0.0)):
        for j in (1, 4, 11):
            # atol covers the exact zeros of the odd Legendre members at x = 0
            assert_allclose(jacobi(j, a, b, x), eval_jacobi(j, a, b, x),
                            rtol=1e-11, atol=1e-14)


def test_jacobi_value_at_one():
    # P_n^(a,b)(1) = (a+1)_n / n!
    for a, b in ((0.0, 0.5), (1.5, 2.0)):
        for n in range(8):
            want = pochhammer(a + 1.0, n) / np.exp(gammaln(n + 1.0))
            assert_allclose(jacobi(n, a, b, np.array([1.0]))[0], want, rtol=1e-12)


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=0, max_value=12),
    a=st.floats(min_value=-0.9, max_value=3.0),
    b=st.floats(min_value=-0.9, max_value=3.0),
    x=st.floats(min_value=-1.0, max_value=1.0),
)
def test_jacobi_reflection_symmetry(n, a, b, x):
    # P_n^(a,b)(-x) = (-1)^n P_n^(b,a)(x)
    left = jacobi(n, a, b, np.array([-x]))[0]
    right = (-1.0) ** n * jacobi(n, b, a, np.array([x]))[0]
    assert_allclose(left, right, rtol=1e-9, atol=1e-9)


def test_sequence_validation():
    with pytest.raises(ValueError):
        hermite_sequence(-1, 0.0)
    with pytest.raises(ValueError):
        laguerre_sequence(3, -1.0, 0.5)
    with pytest.raises(ValueError):
        jacobi_sequence(3, -1.2, 0.0, 0.5)


# ---------------------------------------------------------------------------
# hypergeometric partial sums
# ---------------------------------------------------------------------------

@settings(max_examples=40, deadline=None)
@given(
    a=st.floats(min_value=0.1, max_value=4.0),
    c=st.floats(min_value=0.2, max_value=5.0),
    x=st.floats(min_value=-6.0, max_value=6.0),
)
def test_kummer_transformation(a, c, x):
    # 1F1(a; c; x) = e^x 1F1(c - a; c; -x)
    left = hyp1f1(a, c, x)
    right = np.exp(x) * hyp1f1(c - a, c, -x)
    assert_allclose(left, right, rtol=1e-9, atol=1e-12)


def test_gauss_summation_inside_disk_limit():
    # 2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))
    # for terminating series (upper parameter a nonpositive integer), which
    # is Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n.
    for n in (0, 1, 4, 9):
        for b, c in ((0.7, 1.9), (2.0, 3.5)):
            want = pochhammer(c - b, n) / pochhammer(c, n)
            assert_allclose(hyp2f1(-n, b, c, 1.0), want, rtol=1e-12)


def test_gauss_series_against_scipy():
    from scipy.special import hyp2f1 as scipy_hyp2f1
    for x in (-0.8, -0.2, 0.3, 0.7):
        for a, b, c in ((0.5, 0.5, 1.5), (1.0, 2.0, 3.2)):
            assert_allclose(hyp2f1(a, b, c, x), scipy_hyp2f1(a, b, c, x), rtol=1e-9)


def test_saalschuetz_identity():
    # Balanced terminating 3F2 at unit argument:
    # 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
    # (parameters chosen so the balancing lower parameter stays off the
    # nonpositive integers, where the series itself is undefined)
    for n in (1, 3, 6):
        for a, b, c in ((0.5, 1.2, 2.6), (1.0, 0.3, 3.1)):
            d = 1.0 + a + b - c - n
            got = hyp3f2((-n, a, b), (c, d), 1.0)
            want = (pochhammer(c - a, n) * pochhammer(c - b, n)
                    / (pochhammer(c, n) * pochhammer(c - a - b, n)))
            assert_allclose(got, want, rtol=1e-11)


def test_hyp_series_reports_termination():
    r = hyp_series("1F1", (-3.0,), (1.5,), 2.0)
    assert r.first_omitted == 0.0
    assert r.terms_used <= 5


def test_hyp_series_rejects_bad_input():
    with pytest.raises(ValueError):
        hyp_series("0F1", (), (1.0,), 0.5)
    with pytest.raises(ValueError):
        hyp_series("2F1", (0.5,), (1.5,), 0.5)  # wrong parameter count
    with pytest.raises(ValueError):
        hyp2f1(0.5, 0.5, -2.0, 0.3)  # nonpositive-integer lower parameter
    # Gauss-type series outside the unit disk without termination
    with pytest.raises(HypSeriesError):
        hyp2f1(0.5, 0.5, 1.5, 1.2)
    with pytest.raises(HypSeriesError):
        hyp3f2((0.5, 1.0, 1.5), (2.0, 2.5), -1.0)
    # divergent: terms grow without bound
    with pytest.raises(HypSeriesError):
        hyp1f1(2.0, 0.5, 400.0, truncation=20)


def test_gamma_helpers():
    assert_allclose(pochhammer(3.0, 4), 3.0 * 4.0 * 5.0 * 6.0)
    assert pochhammer(2.5, 0) == 1.0
    # gamma_ratio multiplies/divides Gammas stably in log space
    assert_allclose(gamma_ratio([7.0], [4.0]), 6.0 * 5.0 * 4.0, rtol=1e-13)
    assert_allclose(beta(2.0, 3.0), 1.0 / 12.0, rtol=1e-13)
    assert_allclose(log_gamma(6.0), np.log(120.0), rtol=1e-13)


# ---------------------------------------------------------------------------
# orthonormal families
# ---------------------------------------------------------------------------

def test_hermite_family_orthonormal_under_line_rule():
    fam = hermite_l2()
    rule = gauss_line(40)
    P = basis_matrix(fam, 12, rule.nodes)
    gram = P.T.conj() @ (rule.weights[:, None] * P)
    assert np.max(np.abs(gram - np.eye(13))) < 1e-12


def test_laguerre_family_orthonormal_under_halfline_rule():
    for alpha in (0.0, 0.5, 2.0):
        fam = laguerre_l2(alpha)
        rule = gauss_halfline(40, alpha)
        P = basis_matrix(fam, 12, rule.nodes)
        gram = P.T.conj() @ (rule.weights[:, None] * P)
        assert np.max(np.abs(gram - np.eye(13))) < 1e-11


def test_basis_eval_matches_matrix_column():
    fam = laguerre_l2(0.5)
    x = np.array([0.2, 1.1, 3.0])
    M = basis_matrix(fam, 6, x)
    for j in (0, 2, 6):
        assert_allclose(basis_eval(fam, j, x), M[:, j], rtol=1e-13)
