"""Orthogonal polynomials, hypergeometric series, and Gamma-ratio helpers.

All polynomial evaluation goes through three-term recurrences (never
explicit coefficient sums), and every factorial / Gamma ratio is formed in
log space with explicit sign tracking, so that the routines stay usable at
the degrees (several hundred) needed by the truncated-series kernel
evaluators built on top of them.

Evaluation points may be scalars or numpy arrays; parameters are scalars.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np
from scipy.special import gammaln

__all__ = [
    "hermite",
    "hermite_sequence",
    "laguerre",
    "laguerre_sequence",
    "jacobi",
    "jacobi_sequence",
    "log_gamma",
    "beta",
    "gamma_ratio",
    "pochhammer",
    "HypResult",
    "HypSeriesError",
    "hyp_series",
    "hyp1f1",
    "hyp2f1",
    "hyp3f2",
    "BasisFamily",
    "hermite_l2",
    "laguerre_l2",
    "bargmann_fock",
    "bergman",
    "disk_eigen",
    "dirichlet",
    "gen_dirichlet",
    "basis_eval",
    "basis_matrix",
]


# ---------------------------------------------------------------------------
# Gamma / Beta helpers
# ---------------------------------------------------------------------------

def log_gamma(x):
    """log Gamma(x) for x > 0 (scalar or array)."""
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0.0):
        raise ValueError("log_gamma requires strictly positive arguments")
    out = gammaln(x)
    return float(out) if out.ndim == 0 else out


def beta(x, y):
    """Euler Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y), x, y > 0."""
    return float(np.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y)))


def gamma_ratio(numerators: Sequence[float], denominators: Sequence[float]) -> float:
    """Product of Gamma(n_i) / product of Gamma(d_j), formed in log space.

    All arguments must be positive; ratios of huge factorials therefore never
    overflow on the way to a moderate final value.
    """
    acc = 0.0
    for v in numerators:
        acc += log_gamma(v)
    for v in denominators:
        acc -= log_gamma(v)
    return float(np.exp(acc))


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


# ---------------------------------------------------------------------------
# Classical orthogonal polynomials via three-term recurrences
# ---------------------------------------------------------------------------

def hermite(j: int, x):
    """Physicists' Hermite polynomial H_j(x)."""
    return hermite_sequence(j, x)[..., j]


def hermite_sequence(jmax: int, x):
    """H_0(x) .. H_jmax(x) stacked along the last axis.

    Recurrence: H_{k+1} = 2 x H_k - 2 k H_{k-1}.
    """
    if jmax < 0:
        raise ValueError("degree must be nonnegative")
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape + (jmax + 1,))
    out[..., 0] = 1.0
    if jmax >= 1:
        out[..., 1] = 2.0 * x
    for k in range(1, jmax):
        out[..., k + 1] = 2.0 * x * out[..., k] - 2.0 * k * out[..., k - 1]
    return out


def laguerre(j: int, alpha: float, x):
    """Generalized Laguerre polynomial L_j^(alpha)(x), alpha > -1."""
    return laguerre_sequence(j, alpha, x)[..., j]


def laguerre_sequence(jmax: int, alpha: float, x):
    """L_0^(alpha)(x) .. L_jmax^(alpha)(x) stacked along the last axis.

    Recurrence: (k+1) L_{k+1} = (2k + alpha + 1 - x) L_k - (k + alpha) L_{k-1}.
    """
    if alpha <= -1.0:
        raise ValueError("Laguerre parameter must satisfy alpha > -1")
    if jmax < 0:
        raise ValueError("degree must be nonnegative")
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape + (jmax + 1,))
    out[..., 0] = 1.0
    if jmax >= 1:
        out[..., 1] = 1.0 + alpha - x
    for k in range(1, jmax):
        out[..., k + 1] = (
            (2.0 * k + alpha + 1.0 - x) * out[..., k]
            - (k + alpha) * out[..., k - 1]
        ) / (k + 1.0)
    return out


def jacobi(j: int, a: float, b: float, x):
    """Jacobi polynomial P_j^(a,b)(x) for a, b > -1.

    Negative-integer first parameters (which occur in the disk eigenfunction
    family) are handled separately inside ``basis_eval`` through a
    terminating hypergeometric form; this entry point insists on the
    classical parameter range where the recurrence is valid.
    """
    return jacobi_sequence(j, a, b, x)[..., j]


def jacobi_sequence(jmax: int, a: float, b: float, x):
    """P_0^(a,b)(x) .. P_jmax^(a,b)(x) stacked along the last axis."""
    if a <= -1.0 or b <= -1.0:
        raise ValueError("Jacobi parameters must satisfy a, b > -1")
    if jmax < 0:
        raise ValueError("degree must be nonnegative")
    x = np.asarray(x, dtype=float)
    out = np.empty(x.shape + (jmax + 1,))
    out[..., 0] = 1.0
    if jmax >= 1:
        out[..., 1] = 0.5 * (a - b + (a + b + 2.0) * x)
    for k in range(1, jmax):
        n = k + 1.0
        c = 2.0 * n + a + b
        a1 = 2.0 * n * (n + a + b) * (c - 2.0)
        a2 = (c - 1.0) * (a * a - b * b)
        a3 = (c - 1.0) * c * (c - 2.0)
        a4 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * c
        out[..., k + 1] = ((a2 + a3 * x) * out[..., k] - a4 * out[..., k - 1]) / a1
    return out


# ---------------------------------------------------------------------------
# Hypergeometric partial sums
# ---------------------------------------------------------------------------

class HypResult(NamedTuple):
    value: complex
    first_omitted: float
    terms_used: int


class HypSeriesError(ValueError):
    """Raised when a hypergeometric partial sum shows no sign of converging."""


_HYP_KINDS = {"1F1": (1, 1), "2F1": (2, 1), "3F2": (3, 2)}


def hyp_series(kind: str, upper: Sequence[float], lower: Sequence[float],
               x, truncation: int = 200) -> HypResult:
    """Partial sum of a hypergeometric series with an error indicator.

    Parameters
    ----------
    kind : one of '1F1', '2F1', '3F2'
    upper, lower : parameter lists of the lengths implied by `kind`
    x : real or complex argument
    truncation : number of terms retained

    Returns the partial sum, the magnitude of the first omitted term (zero
    when the series terminated exactly), and the number of terms actually
    summed.  Raises :class:`HypSeriesError` when the terms are still growing
    at the truncation point, or when a Gauss-type series is evaluated outside
    its disk of convergence without terminating.
    """
    if kind not in _HYP_KINDS:
        raise ValueError(f"unknown hypergeometric kind {kind!r}")
    nu, nl = _HYP_KINDS[kind]
    if len(upper) != nu or len(lower) != nl:
        raise ValueError(f"{kind} takes {nu} upper and {nl} lower parameters")
    for c in lower:
        if float(c) <= 0.0 and float(c) == int(c):
            raise ValueError("lower parameters must not be nonpositive integers")
    terminating = any(float(a) == int(a) and float(a) <= 0.0 for a in upper)
    if nu == nl + 1 and not terminating and abs(x) >= 1.0:
        raise HypSeriesError(
            f"{kind} series does not converge at |x| = {abs(x):.3g} >= 1"
        )

    x = complex(x)
    term: complex = 1.0 + 0.0j
    total: complex = term
    prev_mag = abs(term)
    used = 1
    for k in range(truncation - 1):
        num = 1.0
        for a in upper:
            num *= a + k
        den = 1.0
        for c in lower:
            den *= c + k
        term = term * (num / den) * x / (k + 1.0)
        if term == 0.0:
            # exact termination: a nonpositive-integer upper parameter ran out
            return HypResult(_realify(total), 0.0, used)
        total += term
        prev_mag, mag = abs(term), abs(term)
        used += 1
    # first omitted term
    num = 1.0
    for a in upper:
        num *= a + (truncation - 1)
    den = 1.0
    for c in lower:
        den *= c + (truncation - 1)
    omitted = term * (num / den) * x / float(truncation)
    if omitted == 0.0:
        return HypResult(_realify(total), 0.0, used)
    if abs(omitted) >= abs(term):
        raise HypSeriesError(
            f"{kind} terms are not decreasing after {truncation} terms "
            f"(|t_K| = {abs(omitted):.3g} >= |t_K-1| = {abs(term):.3g})"
        )
    return HypResult(_realify(total), abs(omitted), used)


def _realify(value: complex):
    return value.real if value.imag == 0.0 else value


def hyp1f1(a: float, c: float, x, truncation: int = 200):
    """Kummer's confluent function 1F1(a; c; x).

    For real negative arguments the Kummer transformation
    1F1(a; c; x) = e^x 1F1(c-a; c; -x) is applied first, turning an
    alternating (cancellation-prone) sum into an all-positive one.
    """
    if np.isrealobj(x) and np.real(x) < 0.0:
        return float(np.exp(x) * hyp_series("1F1", [c - a], [c], -x, truncation).value)
    return hyp_series("1F1", [a], [c], x, truncation).value


def hyp2f1(a: float, b: float, c: float, x, truncation: int = 200):
    return hyp_series("2F1", [a, b], [c], x, truncation).value


def hyp3f2(uppers: Sequence[float], lowers: Sequence[float], x,
           truncation: int = 200):
    return hyp_series("3F2", list(uppers), list(lowers), x, truncation).value


# ---------------------------------------------------------------------------
# Orthonormal basis families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BasisFamily:
    """An orthonormal family, identified by kind plus shape parameters.

    kinds: 'hermite_l2', 'laguerre_l2' (alpha,), 'bargmann_fock',
    'bergman' (delta,), 'disk_eigen' (nu, ell), 'dirichlet',
    'gen_dirichlet' (alpha, m).
    """

    kind: str
    params: tuple = ()

    def __str__(self):
        if not self.params:
            return self.kind
        inner = ", ".join(f"{p:g}" for p in self.params)
        return f"{self.kind}({inner})"


def hermite_l2() -> BasisFamily:
    """Hermite functions h_j(x) = H_j(x) e^0 / (pi^(1/4) sqrt(2^j j!)) on the
    Gaussian-weighted line (the weight lives in the measure, not the basis)."""
    return BasisFamily("hermite_l2")


def laguerre_l2(alpha: float) -> BasisFamily:
    """sqrt(j! / Gamma(alpha+j+1)) L_j^(alpha), orthonormal against
    x^alpha e^{-x} dx on the half-line."""
    if alpha <= -1.0:
        raise ValueError("laguerre_l2 requires alpha > -1")
    return BasisFamily("laguerre_l2", (float(alpha),))


def bargmann_fock() -> BasisFamily:
    """z^j / sqrt(pi j!), orthonormal for the Gaussian plane measure."""
    return BasisFamily("bargmann_fock")


def bergman(delta: float) -> BasisFamily:
    """sqrt(Gamma(1+delta+j) / (j! Gamma(delta+1))) z^j, orthonormal for the
    probability measure (delta/pi)(1-|z|^2)^(delta-1) dA on the disk."""
    if delta <= 0.0:
        raise ValueError("bergman requires delta > 0")
    return BasisFamily("bergman", (float(delta),))


def disk_eigen(nu: float, ell: int) -> BasisFamily:
    """Eigenfunction family of the hyperbolic Landau level ell at weight nu.

    Requires 2 nu > 1 and 0 <= ell <= floor(nu - 1/2); orthonormal in
    L^2 of the disk with weight (1-|z|^2)^(2 nu - 2) dA.
    """
    if 2.0 * nu <= 1.0:
        raise ValueError("disk_eigen requires nu > 1/2")
    ell = int(ell)
    if ell < 0 or ell > int(np.floor(nu - 0.5)):
        raise ValueError("disk_eigen requires 0 <= ell <= floor(nu - 1/2)")
    return BasisFamily("disk_eigen", (float(nu), ell))


def dirichlet() -> BasisFamily:
    """1/sqrt(pi), z^j / sqrt(pi j) (j >= 1): orthonormal for the Dirichlet
    pairing pi a_0 conj(b_0) + pi sum_j j a_j conj(b_j)."""
    return BasisFamily("dirichlet")


def gen_dirichlet(alpha: float, m: int) -> BasisFamily:
    """Orthonormal family of the order-m Bergman-Dirichlet space at weight alpha.

    Low indices j < m are weighted-Bergman monomials; from j = m onward the
    normalization switches to the derivative pairing of order m.
    """
    if alpha <= -1.0:
        raise ValueError("gen_dirichlet requires alpha > -1")
    m = int(m)
    if m < 1:
        raise ValueError("gen_dirichlet requires m >= 1")
    return BasisFamily("gen_dirichlet", (float(alpha), m))


def _check_disk_point(z):
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("disk bases are only defined for |z| < 1")
    return z


def basis_eval(family: BasisFamily, j: int, point):
    """Evaluate the j-th member of an orthonormal family at a point (or array)."""
    if j < 0:
        raise ValueError("basis index must be nonnegative")
    return basis_matrix(family, j, point)[..., j]


def basis_matrix(family: BasisFamily, jmax: int, points):
    """Members 0..jmax of a family evaluated at `points`, stacked on the last axis.

    This is the workhorse behind the truncated-series kernel evaluators, so
    each family uses a stable normalized recurrence (or log-space prefactors)
    rather than naive factorial quotients.
    """
    kind = family.kind
    if jmax < 0:
        raise ValueError("jmax must be nonnegative")

    if kind == "hermite_l2":
        x = np.asarray(points, dtype=float)
        out = np.empty(x.shape + (jmax + 1,))
        out[..., 0] = np.pi ** -0.25
        if jmax >= 1:
            out[..., 1] = np.sqrt(2.0) * x * out[..., 0]
        for k in range(1, jmax):
            out[..., k + 1] = (
                x * np.sqrt(2.0 / (k + 1.0)) * out[..., k]
                - np.sqrt(k / (k + 1.0)) * out[..., k - 1]
            )
        return out

    if kind == "laguerre_l2":
        (alpha,) = family.params
        x = np.asarray(points, dtype=float)
        out = np.empty(x.shape + (jmax + 1,))
        out[..., 0] = np.exp(-0.5 * log_gamma(alpha + 1.0))
        if jmax >= 1:
            out[..., 1] = (1.0 + alpha - x) * out[..., 0] / np.sqrt(alpha + 1.0)
        for k in range(1, jmax):
            out[..., k + 1] = (
                (2.0 * k + alpha + 1.0 - x) * out[..., k]
                - np.sqrt(k * (k + alpha)) * out[..., k - 1]
            ) / np.sqrt((k + 1.0) * (k + 1.0 + alpha))
        return out

    if kind == "bargmann_fock":
        z = np.asarray(points, dtype=complex)
        out = np.empty(z.shape + (jmax + 1,), dtype=complex)
        out[..., 0] = np.pi ** -0.5
        for k in range(jmax):
            out[..., k + 1] = out[..., k] * z / np.sqrt(k + 1.0)
        return out

    if kind == "bergman":
        (delta,) = family.params
        z = _check_disk_point(points)
        out = np.empty(z.shape + (jmax + 1,), dtype=complex)
        out[..., 0] = 1.0
        for k in range(jmax):
            out[..., k + 1] = out[..., k] * z * np.sqrt((delta + 1.0 + k) / (k + 1.0))
        return out

    if kind == "disk_eigen":
        return _disk_eigen_matrix(family.params, jmax, points)

    if kind == "dirichlet":
        z = _check_disk_point(points)
        out = np.empty(z.shape + (jmax + 1,), dtype=complex)
        out[..., 0] = np.pi ** -0.5
        zj = np.ones_like(z)
        for k in range(1, jmax + 1):
            zj = zj * z
            out[..., k] = zj / np.sqrt(np.pi * k)
        return out

    if kind == "gen_dirichlet":
        alpha, m = family.params
        z = _check_disk_point(points)
        out = np.empty(z.shape + (jmax + 1,), dtype=complex)
        lg_a1 = log_gamma(alpha + 1.0)
        zj = np.ones_like(z)
        for k in range(jmax + 1):
            if k > 0:
                zj = zj * z
            if k < m:
                lognorm = 0.5 * (
                    log_gamma(k + alpha + 2.0) - log_gamma(k + 1.0) - lg_a1
                ) - 0.5 * np.log(np.pi)
            else:
                lognorm = 0.5 * (
                    log_gamma(k - m + 1.0)
                    + log_gamma(k - m + alpha + 2.0)
                    - 2.0 * log_gamma(k + 1.0)
                    - lg_a1
                ) - 0.5 * np.log(np.pi)
            out[..., k] = zj * np.exp(lognorm)
        return out

    raise ValueError(f"unknown basis family {kind!r}")


def _disk_eigen_matrix(params, jmax, points):
    """Disk eigenfunctions psi_j^{nu,ell} for j = 0..jmax.

    For j >= ell an Euler-transformed terminating hypergeometric form is
    used: it has only ell+1 terms and stays finite at z = 0, where the raw
    formula pairs a negative power of conj(z) with a vanishing Jacobi factor.
    For j < ell the defining Jacobi form (first parameter ell - j > 0) is
    evaluated directly.
    """
    nu, ell = params
    ell = int(ell)
    beta_p = 2.0 * (nu - ell) - 1.0
    z = _check_disk_point(points)
    u = (z * np.conj(z)).real
    one_minus_u = 1.0 - u
    out = np.empty(z.shape + (jmax + 1,), dtype=complex)

    lg_bl = log_gamma(beta_p + 1.0 + ell)
    lg_l = log_gamma(ell + 1.0)
    for j in range(jmax + 1):
        lognorm = 0.5 * (
            np.log(beta_p / np.pi)
            + log_gamma(j + 1.0) + lg_bl - lg_l - log_gamma(beta_p + 1.0 + j)
        )
        if j >= ell:
            # binom(j + beta, j) in log space
            logbin = log_gamma(j + beta_p + 1.0) - log_gamma(j + 1.0) - log_gamma(beta_p + 1.0)
            # terminating 2F1(-ell, 1 + beta + j; 1 + beta; 1 - u)
            f = np.ones_like(u)
            term = np.ones_like(u)
            for k in range(ell):
                term = term * ((-ell + k) * (1.0 + beta_p + j + k)
                               / ((1.0 + beta_p + k) * (k + 1.0))) * one_minus_u
                f = f + term
            out[..., j] = (
                np.exp(lognorm + logbin)
                * z ** (j - ell)
                * one_minus_u ** (-ell)
                * f
            )
        else:
            pj = jacobi(j, ell - j, beta_p, 1.0 - 2.0 * u)
            out[..., j] = (
                (-1.0) ** j
                * np.exp(lognorm)
                * np.conj(z) ** (ell - j)
                * one_minus_u ** (-ell)
                * pj
            )
    return out
