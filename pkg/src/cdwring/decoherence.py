"""Noise action Gamma: general quadrature, early-time form, closed form, timescales."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .bath import BathSpec, coth_thermal
from .constants import HBAR, K_B
from .errors import EvaluationError, RootNotFoundError
from .specfun import QuadControl, DEFAULT_QUAD, hyp1f2
from . import dynamics

__all__ = [
    "GammaResult",
    "noise_action",
    "gamma_early",
    "gamma_early_lowT",
    "tau_decoh",
    "tau_Q",
    "lattice_points",
]


@dataclass(frozen=True)
class GammaResult:
    """A noise-action sample together with the method that produced it."""

    t: float
    gamma: float
    method: str  # general-quadrature | early-quadrature | lowT-closed-form

    def __post_init__(self):
        if self.gamma < -1e-12:
            raise ValueError(f"gamma must be non-negative, got {self.gamma}")


def _upsilon(x):
    """2 + x^2 - 2 cos x - 2 x sin x, cancellation-safe near x = 0.

    Small-x series: x^4/4 - x^6/72 + x^8/2880 - ...
    """
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    small = np.abs(x) < 0.5
    xs = x[small]
    x2 = xs * xs
    out[small] = x2 * x2 * (0.25 + x2 * (-1.0 / 72.0 + x2 * (1.0 / 2880.0
                 - x2 / 201600.0)))
    xl = x[~small]
    out[~small] = 2.0 + xl * xl - 2.0 * np.cos(xl) - 2.0 * xl * np.sin(xl)
    return out[()]


def noise_action(phi_minus_f: float, phi_minus_i: float, t: float,
                 spec: BathSpec, inertia: float,
                 quad_ctl: QuadControl = DEFAULT_QUAD) -> float:
    """Noise action for the classical relative path with the given boundaries.

    The double time integral of phi-(tau) alpha_R(tau - tau') phi-(tau') is
    factorized exactly through the frequency representation of alpha_R:

        Gamma = (mu g_s / 2 pi) int_0^Omega w^s coth(hw/2kT) |Phi(w)|^2 dw,
        Phi(w) = int_0^t phi-(u) e^{i w u} du,

    with phi-(u) reconstructed from the kappa coefficients.
    """
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    mu = inertia / HBAR
    b = dynamics.PathBoundary(0.0, 0.0, phi_minus_i, phi_minus_f, t)
    if phi_minus_f == 0.0 and phi_minus_i == 0.0:
        return 0.0

    # Gauss-Legendre nodes resolving up to Omega * t radians of phase
    n_nodes = min(4000, max(96, int(0.75 * spec.Omega * t) + 64))
    x, w = np.polynomial.legendre.leggauss(n_nodes)
    u = 0.5 * t * (x + 1.0)
    wu = 0.5 * t * w
    phi = np.array([dynamics.classical_paths(b, spec, ui)[1] for ui in u])

    def transform_sq(omega):
        ph = omega * u
        c = np.dot(wu * phi, np.cos(ph))
        s = np.dot(wu * phi, np.sin(ph))
        return c * c + s * s

    def integrand(omega):
        return omega**spec.s * coth_thermal(spec, omega) * transform_sq(omega)

    cycles = spec.Omega * t / (2.0 * math.pi)
    limit = max(quad_ctl.limit, int(4 * cycles) + 50)
    val, err = quad(integrand, 0.0, spec.Omega,
                    epsabs=0.0, epsrel=quad_ctl.rel_tol, limit=limit)
    if not math.isfinite(val):
        raise EvaluationError("noise action quadrature failed", t=t, value=val)
    return mu * spec.g_s / (2.0 * math.pi) * val


def gamma_early(spec: BathSpec, mu: float, t: float,
                quad_ctl: QuadControl = DEFAULT_QUAD) -> float:
    """Early-time noise action Gamma_{T,s}(t) by adaptive quadrature.

    Gamma = (g_s / 2 pi mu) int_0^Omega coth(hw/2kT) w^(s-4) *
            (2 + w^2 t^2 - 2 cos wt - 2 wt sin wt) dw.

    The region w t <~ 50 is integrated with the cancellation-safe kernel;
    beyond it the smooth and oscillatory parts are integrated separately
    (the latter with cos/sin-weighted quadrature) so that large Omega * t
    poses no resolution problem.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if not mu > 0:
        raise ValueError(f"mu must be positive, got {mu}")
    if t == 0.0:
        return 0.0
    s = spec.s
    Om = spec.Omega
    pref = spec.g_s / (2.0 * math.pi * mu)
    x_split = 50.0
    w_split = min(Om, x_split / t)

    def inner(w):
        return coth_thermal(spec, w) * w ** (s - 4.0) * _upsilon(w * t)

    total, err = quad(inner, 0.0, w_split,
                      epsabs=0.0, epsrel=quad_ctl.rel_tol, limit=quad_ctl.limit)
    if w_split < Om:
        def smooth(w):
            return coth_thermal(spec, w) * w ** (s - 4.0) * (2.0 + (w * t) ** 2)

        def osc_cos(w):
            return coth_thermal(spec, w) * w ** (s - 4.0) * (-2.0)

        def osc_sin(w):
            return coth_thermal(spec, w) * w ** (s - 4.0) * (-2.0 * w * t)

        v1, e1 = quad(smooth, w_split, Om,
                      epsabs=0.0, epsrel=quad_ctl.rel_tol, limit=quad_ctl.limit)
        v2, e2 = quad(osc_cos, w_split, Om, weight="cos", wvar=t,
                      epsabs=0.0, epsrel=quad_ctl.rel_tol, limit=quad_ctl.limit)
        v3, e3 = quad(osc_sin, w_split, Om, weight="sin", wvar=t,
                      epsabs=0.0, epsrel=quad_ctl.rel_tol, limit=quad_ctl.limit)
        total += v1 + v2 + v3
        err += e1 + e2 + e3
    if not math.isfinite(total):
        raise EvaluationError("early-time Gamma quadrature failed", t=t, value=total)
    return pref * total


def _gamma_lowT_expr(s: float, g_s: float, Omega: float, mu: float, t: float) -> float:
    # termwise reduction of the cutoff integral:
    #   int_0^Om w^(s-4) [2 - 2 cos wt] dw      -> f1 block
    #   int_0^Om w^(s-4) [w^2 t^2 - 2wt sin wt] -> f2 block
    z = -0.25 * t * t * Omega * Omega
    f1 = hyp1f2((s - 3.0) / 2.0, 0.5, (s - 1.0) / 2.0, z)
    f2 = hyp1f2((s - 1.0) / 2.0, 1.5, (s + 1.0) / 2.0, z)
    pref = g_s / (2.0 * math.pi * mu)
    term1 = -2.0 * Omega ** (s - 3.0) * (f1 - 1.0) / (s - 3.0)
    term2 = t * t * Omega ** (s - 1.0) * (1.0 - 2.0 * f2) / (s - 1.0)
    return pref * (term1 + term2)


def gamma_early_lowT(spec: BathSpec, mu: float, t: float) -> float:
    """Zero-temperature closed form of Gamma_{T,s}(t) in terms of 1F2.

    The displayed expression has a removable singularity at s = 1, evaluated
    by a symmetric epsilon offset.
    """
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if t == 0.0:
        return 0.0
    if abs(spec.s - 1.0) < 1e-9:
        eps = 1e-6
        lo = _gamma_lowT_expr(1.0 - eps, spec.g_s, spec.Omega, mu, t)
        hi = _gamma_lowT_expr(1.0 + eps, spec.g_s, spec.Omega, mu, t)
        return 0.5 * (lo + hi)
    return _gamma_lowT_expr(spec.s, spec.g_s, spec.Omega, mu, t)


def tau_decoh(spec: BathSpec, mu: float, horizon_factor: float = 1e8,
              rel_tol: float = 1e-6) -> float:
    """Root of Gamma_{T,s}(t) = 1 by geometric bracket expansion + bisection."""
    horizon = horizon_factor * mu
    t = mu
    f = gamma_early(spec, mu, t) - 1.0
    if f >= 0.0:
        # already decohered by t = mu; expand the bracket downward
        t_hi, f_hi = t, f
        t_lo = t / 2.0
        while gamma_early(spec, mu, t_lo) - 1.0 > 0.0:
            t_hi = t_lo
            t_lo /= 2.0
            if t_lo < 1e-12 * mu:
                raise RootNotFoundError("Gamma exceeds 1 at all probed times")
        return brentq(lambda tt: gamma_early(spec, mu, tt) - 1.0,
                      t_lo, t_hi, rtol=rel_tol)
    while t < horizon:
        t_next = t * 2.0
        f_next = gamma_early(spec, mu, t_next) - 1.0
        if f_next >= 0.0:
            return brentq(lambda tt: gamma_early(spec, mu, tt) - 1.0,
                          t, t_next, rtol=rel_tol)
        t = t_next
    raise RootNotFoundError(
        f"Gamma never reached 1 within horizon {horizon:.3e} s")


def tau_Q(spec: BathSpec, mu: float) -> float:
    """Effective lifetime min(tau_damp, tau_decoh).

    If one timescale cannot be found the other is returned; if neither can,
    the not-found error propagates.
    """
    td = tdec = None
    try:
        td = dynamics.tau_damp(spec)
    except RootNotFoundError:
        pass
    try:
        tdec = tau_decoh(spec, mu)
    except RootNotFoundError:
        if td is None:
            raise
    if td is None:
        return tdec
    if tdec is None:
        return td
    return min(td, tdec)


def lattice_points(spec: BathSpec, mu: float) -> float:
    """Number of observable oscillation periods tau_Q / (4 pi mu)."""
    return tau_Q(spec, mu) / (4.0 * math.pi * mu)
