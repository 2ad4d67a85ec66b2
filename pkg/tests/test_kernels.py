"""Kernel evaluation: closed forms vs truncated basis series vs integral
representations, the convolution weight and its Laplace identity, and
reproducing-kernel structure (symmetry, positivity, basis sums)."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_allclose
from scipy.special import gammaln

from bargmann import (
    KernelFamily,
    KernelSpace,
    classical_kernel,
    dirichlet_kernel,
    gauss_halfline,
    gen_dirichlet_kernel,
    generalized_second_kernel,
    kernel_matrix,
    kernel_series,
    omega,
    omega_laplace,
    omega_laplace_closed,
    papadakis_sum,
    reproducing_kernel,
    second_kernel,
    disk_rule,
)

# one coarse weight shared by the generalized-kernel tests below; the grid
# step only enters through the endpoint-corrected trapezoid, so 5e-3 still
# leaves headroom under the 1e-5 agreements tested here
W_COARSE = omega(0.5, 2, T=40.0, h=5e-3)


def _disk_points(k, rmax, seed=7):
    rng = np.random.default_rng(seed)
    r = rmax * np.sqrt(rng.uniform(0.05, 1.0, k))
    return r * np.exp(2j * np.pi * rng.uniform(0.0, 1.0, k))


def test_classical_closed_form():
    z = np.array([0.3 + 0.2j])
    x = 0.7
    want = np.pi**-0.75 * np.exp(np.sqrt(2.0) * x * z - 0.5 * z * z)
    assert_allclose(classical_kernel(z, x), want, rtol=1e-14)


def test_classical_series_agrees_with_closed_form():
    z = _disk_points(8, 0.6)
    for x in (-1.3, 0.4, 2.2):
        series = kernel_series(KernelFamily("classical"), z, x, J=80)[:, 0]
        assert np.max(np.abs(series - classical_kernel(z, x))) < 1e-12


def test_second_series_agrees_with_closed_form():
    z = _disk_points(8, 0.6)
    for delta in (0.5, 1.5):
        for x in (0.3, 1.8, 4.0):
            series = kernel_series(KernelFamily("second", (delta,)), z, x, J=100)[:, 0]
            closed = second_kernel(delta, z, x)
            assert np.max(np.abs(series - closed) / np.abs(closed)) < 1e-10


def test_generalized_second_series_agrees_with_closed_form():
    z = _disk_points(8, 0.6)
    for nu, ell in ((1.0, 0), (3.0, 2)):
        for x in (0.5, 2.1):
            series = kernel_series(KernelFamily("generalized_second", (nu, ell)),
                                   z, x, J=110)[:, 0]
            closed = generalized_second_kernel(nu, ell, z, x)
            assert np.max(np.abs(series - closed) / np.abs(closed)) < 1e-10


def test_dirichlet_integral_agrees_with_series():
    z = _disk_points(8, 0.6)
    for x in (0.4, 1.7, 5.0):
        series = kernel_series(KernelFamily("dirichlet"), z, x, J=120)[:, 0]
        integral = dirichlet_kernel(z, x)
        assert np.max(np.abs(integral - series)) < 1e-8


def test_dirichlet_value_at_origin():
    # Only the j = 0 term of the basis expansion survives at z = 0, so
    # K(0, x) = psi_0(0) conj(phi_0(x)) is constant in x: 1/sqrt(pi) for the
    # Dirichlet kernel, and sqrt((alpha+1)/pi) / sqrt(Gamma(alpha+1)) for the
    # generalized one (head weight pi/(alpha+1), Laguerre normalizer).
    alpha = 0.5
    gen_want = np.sqrt((alpha + 1.0) / np.pi) / np.sqrt(np.exp(gammaln(alpha + 1.0)))
    for x in (0.2, 1.0, 3.7):
        assert_allclose(dirichlet_kernel(0.0, x), 1.0 / np.sqrt(np.pi), rtol=1e-12)
        assert_allclose(gen_dirichlet_kernel(alpha, 2, 0.0, x, weight=W_COARSE),
                        gen_want, rtol=1e-12)


def test_gen_dirichlet_integral_agrees_with_series():
    z = _disk_points(8, 0.6)
    for x in (0.4, 1.9, 4.2):
        series = kernel_series(KernelFamily("gen_bergman_dirichlet", (0.5, 2)),
                               z, x, J=120)[:, 0]
        integral = gen_dirichlet_kernel(0.5, 2, z, x, weight=W_COARSE)
        assert np.max(np.abs(integral - series)) < 1e-6


def test_kernel_matrix_strategies():
    fam = KernelFamily("second", (1.5,))
    z = np.array([0.2 + 0.1j, -0.3j])
    x = np.array([0.5, 2.0])
    primary = kernel_matrix(fam, z, x)
    closed = kernel_matrix(fam, z, x, strategy="closed")
    series = kernel_matrix(fam, z, x, strategy="series")
    assert primary.shape == (2, 2)
    assert_allclose(primary, closed, rtol=1e-14)
    assert np.max(np.abs(primary - series)) < 1e-10
    with pytest.raises(ValueError):
        kernel_matrix(fam, z, x, strategy="monte_carlo")
    with pytest.raises(ValueError):
        kernel_matrix(KernelFamily("dirichlet"), z, x, strategy="closed")


def test_kernel_domain_validation():
    with pytest.raises(ValueError):
        second_kernel(1.5, 1.1, 0.5)  # outside the unit disk
    with pytest.raises(ValueError):
        second_kernel(-0.5, 0.3, 0.5)
    with pytest.raises(ValueError):
        generalized_second_kernel(1.0, 2, 0.3, 0.5)  # level above floor(nu-1/2)
    with pytest.raises(ValueError):
        KernelFamily("heat")


# ---------------------------------------------------------------------------
# convolution weight
# ---------------------------------------------------------------------------

def test_omega_validation():
    with pytest.raises(ValueError):
        omega(-1.5, 2)
    with pytest.raises(ValueError):
        omega(0.5, 1)
    with pytest.raises(ValueError):
        omega(0.5, 2, T=-1.0)
    with pytest.raises(ValueError):
        omega(0.5, 2, h=0.0)


def test_omega_grid_and_thinning():
    w = omega(0.0, 2, T=20.0, h=1e-2)
    assert w.values.shape == (2001,)
    assert w.values[0] == 0.0
    assert np.all(w.values >= 0.0)
    assert_allclose(w.grid[-1], 20.0)
    assert_allclose(w.tmax, 20.0)
    thin = w.thinned(5)
    assert thin.h == pytest.approx(5e-2)
    assert_allclose(thin.values, w.values[::5])
    with pytest.raises(ValueError):
        w.thinned(7)  # does not divide the interval count
    with pytest.raises(ValueError):
        w.thinned(0)


def test_omega_small_t_power_law():
    # Near t = 0 the weight behaves as C_m t^(2m - 3/2) e^(-t) (1 + O(t)) with
    # C_m = Gamma(3/2)^m Gamma(1/2)^(m-1) / Gamma(2m - 1/2): the chain of
    # Beta integrals collapses at the origin where every factor is a pure
    # power.  Sampled at the first grid step the O(t) profile drift is all
    # that is left, so the deviation must shrink linearly with the step.
    for m in (2, 3):
        c = np.exp(m * gammaln(1.5) + (m - 1) * gammaln(0.5) - gammaln(2 * m - 0.5))
        for h, tol in ((1e-3, 2e-3), (2e-4, 4e-4)):
            w = omega(0.0, m, T=10.0, h=h)
            want = c * h ** (2 * m - 1.5) * np.exp(-h)
            assert abs(w.values[1] - want) / want < tol


def test_omega_laplace_identity():
    # int_0^inf omega(t) e^(-(1+j) t) dt has a Gamma-product closed form;
    # the numeric side runs a plain trapezoid over the sampled grid.
    for m in (2, 3):
        for alpha in (0.0, 1.5):
            w = omega(alpha, m, T=40.0, h=1e-3)
            for j in range(4):
                got = omega_laplace(w, j)
                want = omega_laplace_closed(alpha, m, j)
                assert abs(got - want) / want < 1e-8


def test_omega_laplace_closed_is_positive_decreasing():
    vals = [omega_laplace_closed(0.5, 2, j) for j in range(8)]
    assert all(v > 0.0 for v in vals)
    assert all(a > b for a, b in zip(vals, vals[1:]))


# ---------------------------------------------------------------------------
# reproducing kernels
# ---------------------------------------------------------------------------

_SPACES = [
    KernelSpace("bargmann_fock"),
    KernelSpace("bergman", (1.5,)),
    KernelSpace("weighted_bergman", (0.5,)),
    KernelSpace("disk_eigen", (3.0, 2)),
    KernelSpace("dirichlet"),
    KernelSpace("gen_bergman_dirichlet", (0.5, 2)),
]


@settings(max_examples=25, deadline=None)
@given(
    re1=st.floats(-0.6, 0.6), im1=st.floats(-0.6, 0.6),
    re2=st.floats(-0.6, 0.6), im2=st.floats(-0.6, 0.6),
)
def test_reproducing_kernel_hermitian_and_cauchy_schwarz(re1, im1, re2, im2):
    z = complex(re1, im1)
    w = complex(re2, im2)
    for space in _SPACES:
        k_zw = reproducing_kernel(space, z, w)
        k_wz = reproducing_kernel(space, w, z)
        assert abs(k_zw - np.conj(k_wz)) < 1e-12 * max(1.0, abs(k_zw))
        k_zz = reproducing_kernel(space, z, z).real
        k_ww = reproducing_kernel(space, w, w).real
        assert abs(k_zw) ** 2 <= k_zz * k_ww * (1.0 + 1e-12)


def test_reproducing_kernel_positive_definite():
    pts = _disk_points(6, 0.55, seed=3)
    for space in _SPACES:
        gram = reproducing_kernel(space, pts[:, None], pts[None, :])
        eigs = np.linalg.eigvalsh(gram)
        assert eigs.min() > -1e-12 * eigs.max()


def test_papadakis_sums_converge():
    # K(z, w) = sum_j psi_j(z) conj(psi_j(w)) over the orthonormal family
    z = _disk_points(5, 0.5, seed=11)
    w = _disk_points(5, 0.5, seed=12)
    for space in _SPACES:
        if space.kind == "weighted_bergman":
            continue  # carried by the bergman family up to normalization
        closed = reproducing_kernel(space, z, w)
        summed = papadakis_sum(space.basis(), z, w, 120)
        assert np.max(np.abs(summed - closed) / np.abs(closed)) < 1e-6


def test_weighted_bergman_reproduces_polynomials():
    # f(z) = int_D K(z, w) f(w) (1-|w|^2)^alpha dA(w) for polynomial f
    rng = np.random.default_rng(5)
    coeff = rng.standard_normal(7) + 1j * rng.standard_normal(7)
    alpha = 1.0
    space = KernelSpace("weighted_bergman", (alpha,))
    rule = disk_rule(60, 128, alpha)
    fw = np.polyval(coeff[::-1], rule.nodes)
    for z in (0.1 + 0.4j, -0.3 - 0.2j, 0.5):
        val = np.sum(rule.weights * reproducing_kernel(space, z, rule.nodes) * fw)
        want = np.polyval(coeff[::-1], z)
        assert abs(val - want) / abs(want) < 1e-10


def test_disk_kernels_reject_boundary():
    with pytest.raises(ValueError):
        reproducing_kernel(KernelSpace("bergman", (1.0,)), 0.8, 1.3)


def test_dirichlet_kernel_custom_rule():
    rule = gauss_halfline(160, 0.5)
    z = 0.25 - 0.35j
    assert_allclose(dirichlet_kernel(z, 1.2, rule=rule),
                    dirichlet_kernel(z, 1.2), rtol=1e-10)
