"""Transform kernels, the convolution weight for the generalized family,
and reproducing kernels.

Every kernel has at least two independent evaluation routes:

- a primary route (closed form, or a quadrature/trapezoid evaluation of an
  integral representation for the two Dirichlet-type families), and
- a truncated series over the orthonormal source/target bases.

The two routes are compared in the verification suite; the series route is
also what makes integral inversion against polar disk rules accurate, since
a truncated kernel is integrated exactly by a rule whose angular and radial
orders dominate the truncation index.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import zeta as _hurwitz_zeta

from . import special
from .special import (
    BasisFamily,
    bargmann_fock,
    basis_matrix,
    bergman,
    dirichlet,
    disk_eigen,
    gen_dirichlet,
    hermite_l2,
    hyp3f2,
    jacobi,
    laguerre,
    laguerre_l2,
    log_gamma,
)
from .quadrature import QuadratureRule, gauss_halfline

__all__ = [
    "OmegaWeight",
    "omega",
    "omega_laplace",
    "omega_laplace_closed",
    "classical_kernel",
    "second_kernel",
    "generalized_second_kernel",
    "dirichlet_kernel",
    "gen_dirichlet_kernel",
    "KernelFamily",
    "kernel_matrix",
    "kernel_series",
    "KernelSpace",
    "reproducing_kernel",
    "papadakis_sum",
]

_LOG_PI = float(np.log(np.pi))


def _zeta_negative(nu: float) -> float:
    """zeta(-nu) for nu > 0, via the functional equation.

    These are the coefficients of the fractional h^(nu+1) terms a uniform
    trapezoid leaves behind at a t^nu integrand endpoint (the generalized
    Euler-Maclaurin expansion).
    """
    s = -nu
    return float(
        2.0**s * np.pi ** (s - 1.0) * np.sin(0.5 * np.pi * s)
        * np.exp(log_gamma(1.0 - s)) * _hurwitz_zeta(1.0 - s, 1.0)
    )


# ---------------------------------------------------------------------------
# Convolution weight omega_(alpha, m)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OmegaWeight:
    """The weight omega_(alpha,m) sampled on the uniform grid k*h, k=0..T/h.

    Mathematically the (2(m-1)+1)-factor convolution chain
    sqrt(t)e^-t * [(sqrt(t)e^-2t)*(e^-(alpha+2)t/sqrt(t))] * ... ; each inner
    bracket collapses in closed form to a single smooth factor, and the outer
    convolutions are carried out exactly in the factored form
    t^(2m-3/2) e^-t H(t) with H entire (see ``omega``), so the samples are
    accurate to rounding and the grid step only matters to downstream
    trapezoid consumers.
    """

    alpha: float
    m: int
    h: float
    values: np.ndarray

    @property
    def grid(self) -> np.ndarray:
        return np.arange(self.values.shape[0]) * self.h

    @property
    def tmax(self) -> float:
        return (self.values.shape[0] - 1) * self.h

    def thinned(self, stride: int) -> "OmegaWeight":
        """Every stride-th sample, for cheaper downstream t-integrals.

        The samples themselves are exact to rounding, so thinning only
        coarsens downstream trapezoids — the kernel's is endpoint-corrected
        to h^(2m - 1/2) (see gen_dirichlet_kernel) — while cutting the
        memory and time of vectorized kernel evaluation by the stride
        factor.
        """
        stride = int(stride)
        if stride < 1 or (self.values.shape[0] - 1) % stride:
            raise ValueError("stride must divide the number of grid intervals")
        return OmegaWeight(self.alpha, self.m, self.h * stride,
                           self.values[::stride].copy())


def omega(alpha: float, m: int, T: float = 40.0, h: float = 1e-3,
          order: int = 48) -> OmegaWeight:
    """Convolution weight omega_(alpha,m) on the grid [0, T] with step h.

    Each convolution in the chain is evaluated through the substitution
    s = t sin^2(theta), which absorbs the fractional-power endpoints: with
    the partial chain written as t^sigma e^-t H(t), the next level is again
    of that form with sigma' = sigma + 2 and

        H'(t) = 2 int_0^(pi/2) sin(theta)^(2 sigma + 1) cos(theta)^3
                H(t sin^2) Q_ell(t cos^2) d(theta),

    where Q_ell(tau) = 2 e^((1-ell) tau) int cos^2(phi)
    exp(-alpha tau sin^2(phi)) d(phi) is the (smooth, closed-form-reduced)
    inner pair of factors.  The theta-integrands are analytic, so a fixed
    Gauss-Legendre rule resolves them to machine precision, and each H is
    entire with exponential rates at most m + alpha - 1, so one Chebyshev
    table per level captures it to rounding on [0, T].  The returned grid
    samples therefore carry no h-dependent build error; h only matters to
    downstream trapezoid consumers such as the kernel's t-integral.
    """
    if alpha <= -1.0:
        raise ValueError("omega requires alpha > -1")
    if m < 2:
        raise ValueError("omega requires m >= 2")
    if T <= 0.0 or h <= 0.0:
        raise ValueError("omega requires positive T and h")
    x, w = np.polynomial.legendre.leggauss(order)
    theta = (x + 1.0) * (np.pi / 4.0)
    wq = w * (np.pi / 4.0)
    s2 = np.sin(theta) ** 2
    c2 = np.cos(theta) ** 2
    cw = c2 * wq

    def q_profile(ell: int, tau: np.ndarray) -> np.ndarray:
        return 2.0 * np.exp((1.0 - ell) * tau) * (
            np.exp(-alpha * tau[..., None] * s2) @ cw)

    deg = 80 + int(np.ceil(0.7 * (m + abs(alpha)) * T))
    level = None          # Chebyshev table of H; None encodes H_1 = 1
    sigma = 0.5
    for ell in range(2, m + 1):
        ang = 2.0 * wq * np.sin(theta) ** (2.0 * sigma + 1.0) * np.cos(theta) ** 3

        def h_next(tt, level=level, ell=ell, ang=ang):
            tt = np.asarray(tt, dtype=float)
            h_prev = 1.0 if level is None else level(tt[..., None] * s2)
            return (h_prev * q_profile(ell, tt[..., None] * c2)) @ ang

        level = np.polynomial.Chebyshev.interpolate(h_next, deg, domain=[0.0, T])
        coef = np.abs(level.coef)
        if coef[-6:].max() > 1e-12 * coef.max():
            raise RuntimeError(
                "omega profile table did not converge on [0, T]; the "
                "tabulation degree undershot the profile's exponential rates"
            )
        sigma += 2.0
    t = np.arange(int(round(T / h)) + 1) * h
    prefactor = t**sigma * np.exp(-t)
    values = prefactor * level(t)
    # the weight is a convolution of nonnegative factors, hence nonnegative;
    # the tabulated profile can dip below zero only within its own rounding
    noise = 64.0 * np.finfo(float).eps * float(np.abs(level.coef).sum())
    floor = float(values.min())
    if floor < -noise * float(prefactor.max()):
        raise RuntimeError(f"omega grid went negative beyond round-off: {floor}")
    values = np.where(values < 0.0, 0.0, values)
    return OmegaWeight(float(alpha), int(m), float(h), values)


def omega_laplace(weight: OmegaWeight, j: float) -> float:
    """Trapezoid Laplace transform of a sampled weight at rate j."""
    t = weight.grid
    return float(np.trapezoid(np.exp(-j * t) * weight.values, t))


def omega_laplace_closed(alpha: float, m: int, j: float) -> float:
    """Closed-form Laplace transform of omega_(alpha,m) at rate j >= 0.

    Product of the transforms of the individual convolution factors,
    Gamma(3/2)^m Gamma(1/2)^(m-1) / ([(j+1)...(j+m)]^(3/2)
    [(j+alpha+2)...(j+alpha+m)]^(1/2)), assembled in log space.
    """
    if j < 0:
        raise ValueError("rate must be nonnegative")
    acc = m * log_gamma(1.5) + (m - 1) * log_gamma(0.5)
    acc -= 1.5 * sum(np.log(j + b) for b in range(1, m + 1))
    acc -= 0.5 * sum(np.log(j + alpha + b) for b in range(2, m + 1))
    return float(np.exp(acc))


# ---------------------------------------------------------------------------
# The five transform kernels
# ---------------------------------------------------------------------------

def classical_kernel(z, x):
    """K(z, x) = pi^(-3/4) exp(sqrt(2) x z - z^2/2) on C x R."""
    z = np.asarray(z, dtype=complex)
    x = np.asarray(x, dtype=float)
    return np.pi ** -0.75 * np.exp(np.sqrt(2.0) * x * z - 0.5 * z * z)


def _check_unit_disk(z):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("kernel requires |z| < 1")
    return z


def second_kernel(delta: float, z, x):
    """K(z, x) = Gamma(delta+1)^(-1/2) (1-z)^(-delta-1) exp(-xz/(1-z))."""
    if delta <= 0.0:
        raise ValueError("second_kernel requires delta > 0")
    z = _check_unit_disk(z)
    x = np.asarray(x, dtype=float)
    return (
        np.exp(-0.5 * log_gamma(delta + 1.0))
        * (1.0 - z) ** (-delta - 1.0)
        * np.exp(-x * z / (1.0 - z))
    )


def generalized_second_kernel(nu: float, ell: int, z, x):
    """Kernel of the transform onto the disk eigenspace of level ell.

    Prefactor (ell! (2(nu-ell)-1) / (pi Gamma(2 nu - ell)))^(1/2), Moebius
    factor ((1-|z|^2)/|1-z|^2)^(-ell), times (1-z)^(-2 nu) exp(xz/(z-1)) and
    a Laguerre factor of degree ell.  The overall sign (-1)^ell keeps the
    closed form equal to the basis series sum_j conj(phi_j(x)) psi_j(z): the
    factor (conj(z)-1)^ell (1-z)^ell = (-1)^ell |1-z|^(2 ell) arises when the
    bilateral generating function collapses the series, and the sign must
    stay with the kernel for the pairing B[phi_j] = psi_j to hold.
    """
    if 2.0 * nu <= 1.0:
        raise ValueError("generalized_second_kernel requires nu > 1/2")
    ell = int(ell)
    if ell < 0 or ell > int(np.floor(nu - 0.5)):
        raise ValueError("generalized_second_kernel requires 0 <= ell <= floor(nu-1/2)")
    z = _check_unit_disk(z)
    x = np.asarray(x, dtype=float)
    beta_p = 2.0 * (nu - ell) - 1.0
    s = (1.0 - np.abs(z) ** 2) / np.abs(1.0 - z) ** 2
    pref = (-1.0) ** ell * np.exp(
        0.5 * (log_gamma(ell + 1.0) + np.log(beta_p) - _LOG_PI - log_gamma(2.0 * nu - ell))
    )
    return (
        pref
        * s ** (-float(ell))
        * (1.0 - z) ** (-2.0 * nu)
        * np.exp(x * z / (z - 1.0))
        * laguerre(ell, beta_p, x * s)
    )


@lru_cache(maxsize=8)
def _default_t_rule(n: int = 200) -> QuadratureRule:
    return gauss_halfline(n, 0.5)


# cap on the (points x t-grid) scratch arrays formed by the integral kernels
_BLOCK_ENTRIES = 1 << 24


def _blocked(z, x, nt, evaluate):
    """Evaluate a (z, x)-broadcast t-integral in blocks of z rows.

    The integral representations build arrays of shape broadcast(z, x) x nt;
    a full target rule against a full source rule would need tens of GB, so
    the z axis is processed in slices that keep the scratch below
    ~_BLOCK_ENTRIES complex values.  Slicing z alone (rather than
    broadcasting it against x first) matters: the powers of (1 - z e^-t)
    are x-independent, and the evaluators only stay cheap while that axis
    keeps length one.
    """
    shape = np.broadcast(z, x).shape
    total = int(np.prod(shape, dtype=np.int64)) if shape else 1
    if total * nt <= _BLOCK_ENTRIES or not shape:
        return evaluate(z, x)
    z = np.asarray(z)
    x = np.asarray(x)
    sliceable = (
        z.ndim == len(shape)
        and z.shape[0] == shape[0]
        and (x.ndim < len(shape) or x.shape[0] == 1)
    )
    if not sliceable:
        return evaluate(z, x)
    rows = max(1, _BLOCK_ENTRIES // max(1, (total // shape[0]) * nt))
    out = np.empty(shape, dtype=complex)
    for lo in range(0, shape[0], rows):
        out[lo : lo + rows] = evaluate(z[lo : lo + rows], x)
    return out


def dirichlet_kernel(z, x, rule: QuadratureRule | None = None):
    """Kernel of the Dirichlet-space transform, by quadrature of its
    Laplace-type integral representation.

    K(z,x) = (1/sqrt(pi)) [1 + (z/Gamma(3/2)) I(z,x)] where I integrates
    sqrt(t)e^-t (1-ze^-t)^-2 exp(-xze^-t/(1-ze^-t)) L_1(x/(1-ze^-t)) over
    the half-line; the sqrt(t)e^-t factor is the rule's weight (alpha=1/2),
    the rest decays like powers of e^-t and is resolved spectrally.
    """
    z = _check_unit_disk(z)
    x = np.asarray(x, dtype=float)
    if rule is None:
        rule = _default_t_rule()
    elif rule.kind != "halfline" or abs(rule.meta.get("alpha", -1.0) - 0.5) > 1e-14:
        raise ValueError("dirichlet_kernel needs a half-line rule with alpha = 1/2")

    def evaluate(zz, xx):
        v = zz[..., None] * np.exp(-rule.nodes)
        y = xx[..., None] / (1.0 - v)
        g = (1.0 - v) ** -2.0 * np.exp(-(xx[..., None]) * v / (1.0 - v)) * (1.0 - y)
        return g @ rule.weights

    integral = _blocked(z, x, rule.nodes.shape[0], evaluate)
    return (1.0 + z * integral / np.exp(log_gamma(1.5))) / np.sqrt(np.pi)


def _laguerre_complex(m: int, alpha: float, y: np.ndarray) -> np.ndarray:
    # recurrence as in special.laguerre, but for complex arguments
    out0 = np.ones_like(y)
    if m == 0:
        return out0
    out1 = 1.0 + alpha - y
    for k in range(1, m):
        out0, out1 = out1, ((2.0 * k + alpha + 1.0 - y) * out1 - (k + alpha) * out0) / (k + 1.0)
    return out1


def gen_dirichlet_kernel(alpha: float, m: int, z, x,
                         weight: OmegaWeight | None = None):
    """Kernel of the order-m Bergman-Dirichlet transform.

    Head: sum_{j<m} sqrt(j+alpha+1) z^j L_j^(alpha)(x) / sqrt(pi Gamma(1+alpha))
    (each term is conj(phi_j) psi_j for the orthonormal families, which is
    what the pairing and isometry checks require; see the decision notes on
    the head normalization).  Tail: m! Gamma(3/2)^-m Gamma(1/2)^(1-m) /
    sqrt(pi Gamma(1+alpha)) times z^m times the omega-weighted t-integral,
    evaluated by trapezoid on the weight's own grid.
    """
    if alpha <= -1.0:
        raise ValueError("gen_dirichlet_kernel requires alpha > -1")
    m = int(m)
    if m < 2:
        raise ValueError("gen_dirichlet_kernel requires m >= 2")
    z = _check_unit_disk(z)
    x = np.asarray(x, dtype=float)
    if weight is None:
        weight = _default_omega(alpha, m)
    if weight.m != m or abs(weight.alpha - alpha) > 1e-14:
        raise ValueError("omega weight was built for different (alpha, m)")

    lg_a1 = log_gamma(alpha + 1.0)
    norm = np.exp(-0.5 * (_LOG_PI + lg_a1))
    head = np.zeros(np.broadcast(z, x).shape, dtype=complex)
    for j in range(m):
        head = head + np.sqrt(j + alpha + 1.0) * z**j * laguerre(j, alpha, x)
    head = head * norm

    t = weight.grid

    def evaluate(zz, xx):
        v = zz[..., None] * np.exp(-t)
        one_minus_v = 1.0 - v
        g = (
            one_minus_v ** (-alpha - m - 1.0)
            * np.exp(-(xx[..., None]) * v / one_minus_v)
            * _laguerre_complex(m, alpha, xx[..., None] / one_minus_v)
        )
        return np.trapezoid(weight.values * g, t, axis=-1)

    integral = _blocked(z, x, t.shape[0], evaluate)
    # The weight behaves like c t^(2m - 3/2) at the origin (the product of
    # the factor transforms says its Laplace transform decays like
    # s^(1/2 - 2m)), so the trapezoid leaves a zeta(3/2 - 2m) h^(2m - 1/2)
    # endpoint term; restore it with the integrand's t = 0 value.
    exponent = 2 * m - 1.5
    c_origin = np.exp(m * log_gamma(1.5) + (m - 1) * log_gamma(0.5)
                      - log_gamma(2 * m - 0.5))
    g0 = (
        (1.0 - z) ** (-alpha - m - 1.0)
        * np.exp(-x * z / (1.0 - z))
        * _laguerre_complex(m, alpha, x / (1.0 - z) + 0j)
    )
    integral = integral - (
        _zeta_negative(exponent) * weight.h ** (exponent + 1.0) * c_origin * g0
    )
    c_m = np.exp(log_gamma(m + 1.0) - m * log_gamma(1.5) - (m - 1) * log_gamma(0.5)
                 - 0.5 * (_LOG_PI + lg_a1))
    return head + c_m * z**m * integral


@lru_cache(maxsize=8)
def _default_omega(alpha: float, m: int) -> OmegaWeight:
    return omega(alpha, m)


# ---------------------------------------------------------------------------
# Uniform kernel-family interface (closed / series / integral routes)
# ---------------------------------------------------------------------------

_KERNEL_KINDS = {
    "classical",
    "second",
    "generalized_second",
    "dirichlet",
    "gen_bergman_dirichlet",
}


@dataclass(frozen=True)
class KernelFamily:
    """One of the five transform kernels, with its evaluation strategies.

    kinds and parameters: 'classical' (), 'second' (delta,),
    'generalized_second' (nu, ell), 'dirichlet' (),
    'gen_bergman_dirichlet' (alpha, m).

    The primary strategy is the closed form for the first three kinds and
    the integral representation for the two Dirichlet-type kinds; a
    truncated basis series is available for all five.
    """

    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in _KERNEL_KINDS:
            raise ValueError(f"unknown kernel family {self.kind!r}")
        # run the parameter validation of the underlying families
        self.source_basis()
        self.target_basis()

    def source_basis(self) -> BasisFamily:
        if self.kind == "classical":
            return hermite_l2()
        if self.kind == "second":
            return laguerre_l2(self.params[0])
        if self.kind == "generalized_second":
            nu, ell = self.params
            return laguerre_l2(2.0 * (nu - ell) - 1.0)
        if self.kind == "dirichlet":
            return laguerre_l2(0.0)
        return laguerre_l2(self.params[0])

    def target_basis(self) -> BasisFamily:
        if self.kind == "classical":
            return bargmann_fock()
        if self.kind == "second":
            return bergman(self.params[0])
        if self.kind == "generalized_second":
            return disk_eigen(*self.params)
        if self.kind == "dirichlet":
            return dirichlet()
        alpha, m = self.params
        if m < 2:
            raise ValueError("gen_bergman_dirichlet transforms require m >= 2")
        return gen_dirichlet(alpha, m)

    @property
    def primary_strategy(self) -> str:
        return "integral" if self.kind in ("dirichlet", "gen_bergman_dirichlet") else "closed"

    def __str__(self):
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(f'{p:g}' for p in self.params)})"


def kernel_matrix(family: KernelFamily, z, x, strategy: str = "primary",
                  J: int = 120, rule: QuadratureRule | None = None,
                  weight: OmegaWeight | None = None):
    """K(z_i, x_k) for arrays of targets z and sources x.

    strategy: 'primary', 'closed', 'series', or 'integral'.  'closed' and
    'integral' are only defined where the family has that representation.
    """
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    x = np.atleast_1d(np.asarray(x, dtype=float))
    if strategy == "primary":
        strategy = family.primary_strategy

    if strategy == "series":
        return kernel_series(family, z, x, J)

    kind = family.kind
    if strategy == "closed":
        if kind == "classical":
            return classical_kernel(z[:, None], x[None, :])
        if kind == "second":
            return second_kernel(family.params[0], z[:, None], x[None, :])
        if kind == "generalized_second":
            return generalized_second_kernel(*family.params, z[:, None], x[None, :])
        raise ValueError(f"{kind} kernel has no closed-form strategy")
    if strategy == "integral":
        if kind == "dirichlet":
            return dirichlet_kernel(z[:, None], x[None, :], rule=rule)
        if kind == "gen_bergman_dirichlet":
            return gen_dirichlet_kernel(*family.params, z[:, None], x[None, :],
                                        weight=weight)
        raise ValueError(f"{kind} kernel has no integral representation")
    raise ValueError(f"unknown strategy {strategy!r}")


def kernel_series(family: KernelFamily, z, x, J: int = 120):
    """Truncated basis series K(z,x) ~ sum_{j<=J} conj(phi_j(x)) psi_j(z)."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    x = np.atleast_1d(np.asarray(x, dtype=float))
    phi = basis_matrix(family.source_basis(), J, x)
    psi = basis_matrix(family.target_basis(), J, z)
    return psi @ phi.T.astype(complex)


# ---------------------------------------------------------------------------
# Reproducing kernels
# ---------------------------------------------------------------------------

_RK_KINDS = {
    "bargmann_fock",
    "bergman",
    "weighted_bergman",
    "disk_eigen",
    "dirichlet",
    "gen_bergman_dirichlet",
}


@dataclass(frozen=True)
class KernelSpace:
    """A reproducing-kernel space on the plane or disk.

    kinds: 'bargmann_fock' (); 'bergman' (delta,) for the delta-normalized
    disk measure; 'weighted_bergman' (alpha,) for plain (1-|z|^2)^alpha dA;
    'disk_eigen' (nu, ell); 'dirichlet' (); 'gen_bergman_dirichlet'
    (alpha, m >= 1).
    """

    kind: str
    params: tuple = ()

    def __post_init__(self):
        if self.kind not in _RK_KINDS:
            raise ValueError(f"unknown kernel space {self.kind!r}")

    def basis(self) -> BasisFamily:
        """The orthonormal family whose Papadakis sum converges to the kernel."""
        if self.kind == "bargmann_fock":
            return bargmann_fock()
        if self.kind == "bergman":
            return bergman(self.params[0])
        if self.kind == "disk_eigen":
            return disk_eigen(*self.params)
        if self.kind == "dirichlet":
            return dirichlet()
        if self.kind == "gen_bergman_dirichlet":
            return gen_dirichlet(*self.params)
        raise ValueError(f"{self.kind} has no catalogued orthonormal basis here")


def reproducing_kernel(space: KernelSpace, z, w):
    """Closed-form K(z, w) of a reproducing-kernel space."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    kind = space.kind
    if kind == "bargmann_fock":
        return np.exp(z * np.conj(w)) / np.pi
    u = z * np.conj(w)
    if np.any(np.abs(u) >= 1.0):
        raise ValueError("disk kernels require |z conj(w)| < 1")
    if kind == "bergman":
        (delta,) = space.params
        return (1.0 - u) ** (-delta - 1.0)
    if kind == "weighted_bergman":
        (alpha,) = space.params
        return (alpha + 1.0) / np.pi * (1.0 - u) ** (-alpha - 2.0)
    if kind == "disk_eigen":
        nu, ell = space.params
        ell = int(ell)
        beta_p = 2.0 * (nu - ell) - 1.0
        a = (1.0 - np.abs(z) ** 2) * (1.0 - np.abs(w) ** 2)
        b = np.abs(1.0 - u) ** 2
        return (
            (beta_p / np.pi)
            * (1.0 - u) ** (-2.0 * nu)
            * (b / a) ** ell
            * jacobi(ell, 0.0, beta_p, 2.0 * a / b - 1.0)
        )
    if kind == "dirichlet":
        return (1.0 + np.log(1.0 / (1.0 - u))) / np.pi
    # gen_bergman_dirichlet
    alpha, m = space.params
    m = int(m)
    if m < 1:
        raise ValueError("gen_bergman_dirichlet kernel requires m >= 1")
    scalar = np.ndim(u) == 0
    uu = np.atleast_1d(u).ravel()
    head = np.zeros_like(uu)
    for j in range(m):
        head += special.pochhammer(alpha + 2.0, j) / np.exp(log_gamma(j + 1.0)) * uu**j
    tail = np.array(
        [hyp3f2([1.0, 1.0, alpha + 2.0], [m + 1.0, m + 1.0], val, truncation=600)
         for val in uu],
        dtype=complex,
    )
    out = (alpha + 1.0) / np.pi * (head + uu**m * tail / np.exp(2.0 * log_gamma(m + 1.0)))
    return out[0] if scalar else out.reshape(np.shape(u))


def papadakis_sum(basis: BasisFamily, z, w, J: int):
    """Truncated orthonormal-basis sum sum_{j<=J} psi_j(z) conj(psi_j(w))."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    w = np.atleast_1d(np.asarray(w, dtype=complex))
    pz = basis_matrix(basis, J, z)
    pw = basis_matrix(basis, J, w)
    out = np.sum(pz * np.conj(pw), axis=-1)
    return out[0] if out.shape == (1,) else out
