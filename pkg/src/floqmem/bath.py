"""Thermal bosonic environment with a Lorentz-Drude spectral density.

Provides the spectral density J(w) = alpha * w * wc / (w^2 + wc^2), the
Bose occupation, golden-rule rates (including the w -> 0 limit), and the
exponential-series representation of the bath correlation function

    C(t) = (1/pi) Int dw exp(-i w t) J(w) / (1 - exp(-beta w))
         ~ sum_l eta_l exp(-gamma_l t),   t >= 0,

with the Drude pole plus Pade poles of the Bose function.  A direct
adaptive quadrature of the integral serves as the independent oracle for
the series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

__all__ = [
    "BathModel",
    "ExponentialSeries",
    "QuadratureError",
    "spectral_density",
    "bose_occupation",
    "rate",
    "pade_series",
    "correlation_quadrature",
]


class QuadratureError(RuntimeError):
    """Raised when the correlation-function quadrature fails to converge."""


@dataclass(frozen=True)
class BathModel:
    """Environment parameters: coupling alpha, cutoff omega_c, inverse
    temperature beta (units of the system frequency, k_B = 1)."""

    alpha: float
    omega_c: float
    beta: float

    def __post_init__(self):
        if not self.alpha > 0:
            raise ValueError("alpha must be positive")
        if not self.omega_c > 0:
            raise ValueError("omega_c must be positive")
        if not self.beta > 0:
            raise ValueError("beta must be positive")


@dataclass(frozen=True)
class ExponentialSeries:
    """Exponential expansion C(t) = sum_l eta_l exp(-gamma_l t) for t >= 0.

    All decay rates have positive real part; for the Lorentz-Drude/Pade
    construction they are in fact real.
    """

    etas: np.ndarray
    gammas: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "etas", np.asarray(self.etas, dtype=complex))
        object.__setattr__(self, "gammas", np.asarray(self.gammas, dtype=complex))
        if self.etas.shape != self.gammas.shape or self.etas.ndim != 1:
            raise ValueError("etas and gammas must be 1-D arrays of equal length")
        if np.any(self.gammas.real <= 0):
            raise ValueError("all decay rates must have positive real part")

    def __len__(self):
        return len(self.etas)

    def value(self, t):
        """Evaluate the series at time(s) t >= 0."""
        t = np.asarray(t, dtype=float)
        return np.tensordot(self.etas, np.exp(np.multiply.outer(-self.gammas, t)), axes=(0, 0))


def spectral_density(bath, omega):
    """Lorentz-Drude spectral density alpha * w * wc / (w^2 + wc^2).

    Defined for all real frequencies; odd in omega by construction.
    """
    omega = np.asarray(omega, dtype=float)
    out = bath.alpha * omega * bath.omega_c / (omega**2 + bath.omega_c**2)
    return out if out.ndim else float(out)


def bose_occupation(beta, omega):
    """Bose-Einstein occupation N(w) = 1 / (exp(beta w) - 1) for w > 0."""
    if omega <= 0:
        raise ValueError("bose_occupation requires omega > 0; use rate() for "
                         "signed frequencies")
    return 1.0 / math.expm1(beta * omega)


def rate(bath, omega_f):
    """Golden-rule rate gamma(w) = J(w) / (1 - exp(-beta w)) >= 0.

    Defined for any real frequency; satisfies detailed balance
    gamma(w) = exp(beta w) gamma(-w).  At w = 0 the removable limit
    alpha / (beta wc) is returned (the per-channel value; the two merged
    zero-frequency channels of the degenerate dissipator carry twice this,
    matching lim_{w->0} J(w) (2 N(w) + 1) = 2 alpha / (beta wc)).
    """
    x = bath.beta * omega_f
    if abs(x) < 1e-8:
        # removable singularity: J(w)/(1 - e^(-beta w)) -> alpha/(beta wc)
        return bath.alpha / (bath.beta * bath.omega_c)
    return spectral_density(bath, omega_f) / (-math.expm1(-x))


def _pade_poles_weights(n_pade):
    """Poles xi_j and weights kappa_j of the [N-1/N] Pade decomposition of
    the Bose function,

        1/(e^x - 1) ~ 1/x - 1/2 + sum_j 2 kappa_j x / (x^2 + xi_j^2).

    Built from the eigenvalues of the standard symmetric tridiagonal
    matrices; for j << N the poles approach the Matsubara values 2 pi j
    with kappa_j -> 1.  Validity is established against the quadrature
    oracle, not the construction.
    """
    if n_pade < 1:
        raise ValueError("need at least one Pade pole")
    # poles: 2N x 2N tridiagonal with off-diagonals 1/sqrt((2m+1)(2m+3)), m >= 1
    m = np.arange(1, 2 * n_pade)
    off = 1.0 / np.sqrt((2 * m + 1.0) * (2 * m + 3.0))
    evals = np.linalg.eigvalsh(np.diag(off, 1) + np.diag(off, -1))
    pos = evals[evals > 0]
    if len(pos) != n_pade:
        raise RuntimeError("Pade pole construction returned wrong count")
    xi = np.sort(2.0 / pos)

    # zeros: (2N-1) x (2N-1) tridiagonal with off-diagonals
    # 1/sqrt((2m+3)(2m+5)); its N-1 positive eigenvalues give the chi_k
    if n_pade == 1:
        chi2 = np.empty(0)
    else:
        mp = np.arange(1, 2 * n_pade - 1)
        offp = 1.0 / np.sqrt((2 * mp + 3.0) * (2 * mp + 5.0))
        evp = np.linalg.eigvalsh(np.diag(offp, 1) + np.diag(offp, -1))
        chi2 = np.sort(2.0 / evp[evp > 1e-12])**2
        if len(chi2) != n_pade - 1:
            raise RuntimeError("Pade zero construction returned wrong count")

    xi2 = xi**2
    kappa = np.empty(n_pade)
    pref = 0.5 * n_pade * (2 * n_pade + 3.0)
    for j in range(n_pade):
        num = np.prod(chi2 - xi2[j]) if len(chi2) else 1.0
        den = np.prod(np.delete(xi2, j) - xi2[j])
        kappa[j] = pref * num / (den if n_pade > 1 else 1.0)
    return xi, kappa


def pade_series(bath, K):
    """Exponential series for C(t): Drude pole plus K Pade poles.

    The Drude term carries the exact Bose factor at the pole,
    eta_0 = (alpha wc / 2) (cot(beta wc / 2) - i) with gamma_0 = wc; the
    Pade terms are real with gamma_j = xi_j / beta.  Accuracy is checked
    against correlation_quadrature, improving monotonically with K.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    a, wc, beta = bath.alpha, bath.omega_c, bath.beta
    x0 = beta * wc
    if abs(math.sin(0.5 * x0)) < 1e-12:
        raise ValueError("beta * omega_c at a Bose-pole resonance; perturb parameters")
    etas = [0.5 * a * wc * (1.0 / math.tan(0.5 * x0) - 1.0j)]
    gammas = [wc]
    xi, kappa = _pade_poles_weights(K)
    for x, k in zip(xi, kappa):
        if abs(x - x0) < 1e-10:
            raise ValueError("Pade pole collides with the Drude pole; change K or beta")
        etas.append(2.0 * a * wc * k * x / (x**2 - x0**2))
        gammas.append(x / beta)
    return ExponentialSeries(np.array(etas, dtype=complex), np.array(gammas, dtype=complex))


def _integrand_real(omega, bath):
    # folded even part of the correlation integrand, J(w) coth(beta w / 2),
    # with the removable w -> 0 limit 2 alpha / (beta wc) patched in
    x = bath.beta * omega
    if abs(x) < 1e-6:
        lim = 2.0 * bath.alpha / (bath.beta * bath.omega_c)
        return lim * (1.0 + x * x / 12.0) * bath.omega_c**2 / (omega**2 + bath.omega_c**2)
    return spectral_density(bath, omega) / math.tanh(0.5 * x)


def correlation_quadrature(bath, t, abs_err=1e-8, window_factor=50.0):
    """Directly integrate the correlation function C(t), the oracle for
    pade_series.

    The real part is (1/pi) Int_0^inf J(w) coth(beta w / 2) cos(w t) dw and
    the imaginary part -(1/pi) Int_0^inf J(w) sin(w t) dw.  For t > 0 the
    slowly decaying tail is evaluated with the Fourier-weighted algorithm,
    so the result meets ``abs_err``.  At t = 0 the real part diverges
    logarithmically for the Lorentz-Drude density; there the integral is
    taken over the finite window |w| < W with W = window_factor *
    max(wc, 1/beta), which is the regularised value this library uses.

    Raises QuadratureError when the quadrature cannot reach the target.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    W = window_factor * max(bath.omega_c, 1.0 / bath.beta)
    split = 10.0 * max(bath.omega_c, 1.0 / bath.beta)

    def f_re(w):
        return _integrand_real(w, bath)

    one_pi = 1.0 / math.pi
    if t == 0:
        re, err_re = quad(f_re, 0.0, W, epsabs=abs_err, epsrel=1e-11, limit=400)
        im, err_im = 0.0, 0.0
        im_val = 0.0
    else:
        re1, e1 = quad(f_re, 0.0, split, epsabs=0.1 * abs_err, epsrel=1e-11,
                       weight="cos", wvar=t, limit=400)
        re2, e2 = quad(f_re, split, np.inf, epsabs=0.1 * abs_err,
                       weight="cos", wvar=t, limit=400, limlst=200)
        re, err_re = re1 + re2, e1 + e2
        im1, e3 = quad(lambda w: spectral_density(bath, w), 0.0, split,
                       epsabs=0.1 * abs_err, epsrel=1e-11, weight="sin", wvar=t,
                       limit=400)
        im2, e4 = quad(lambda w: spectral_density(bath, w), split, np.inf,
                       epsabs=0.1 * abs_err, weight="sin", wvar=t, limit=400,
                       limlst=200)
        im_val, err_im = im1 + im2, e3 + e4
    if err_re + err_im > 10.0 * abs_err:
        raise QuadratureError(
            f"correlation quadrature at t={t} achieved error {err_re + err_im:.3e}, "
            f"target {abs_err:.3e}")
    return one_pi * (re - 1.0j * im_val)
