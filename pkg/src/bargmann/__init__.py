"""Numerics for Bargmann-type integral transforms and their kernel spaces.

Five transforms between L2 spaces and reproducing-kernel Hilbert spaces
(Fock, weighted Bergman, eigenspaces of the hyperbolic Landau operator, and
two Dirichlet-type spaces), each with independent evaluation routes, plus
the invariant disk operators whose kernels characterize the target spaces
and a verification engine exercising the documented invariants.
"""

from .special import (
    BasisFamily,
    HypResult,
    HypSeriesError,
    bargmann_fock,
    basis_eval,
    basis_matrix,
    bergman,
    beta,
    dirichlet,
    disk_eigen,
    gamma_ratio,
    gen_dirichlet,
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
from .quadrature import (
    QuadratureRule,
    disk_rule,
    gauss_halfline,
    gauss_line,
    gaussian_plane_rule,
    integrate,
)
from .kernels import (
    KernelFamily,
    KernelSpace,
    OmegaWeight,
    classical_kernel,
    dirichlet_kernel,
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
)
from .transforms import (
    CoefficientVector,
    TargetSpace,
    TransformOperator,
    basis_to_taylor,
    circle_points,
    coefficients,
    dirichlet_inner,
    dirichlet_monomial_weights,
    forward,
    forward_gram,
    forward_map,
    inverse_integral,
    inverse_series,
    isometry_check,
    isometry_norms,
    make_transform,
    monomial_normalizer,
    pairing_residual,
    pairing_residuals,
    reverse_pairing_residual,
    round_trip_integral,
    round_trip_series,
    series_transform,
    target_coefficients,
    taylor_from_circle,
    taylor_to_basis,
)
from .operators import (
    DiskOperator,
    MonomialExpansion,
    apply_exact,
    apply_fd,
    casimir,
    eigen_check,
    gen_invariant_laplacian,
    harmonic_membership,
    hyperbolic_landau,
    invariant_laplacian,
    landau_eigenvalue,
    operator_sample_points,
    point_spectrum,
)
from .verify import Check, RunConfig, SUITES, VerificationReport, run_suite

__version__ = "0.1.0"
