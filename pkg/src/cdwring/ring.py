"""Quantum states on the ring and expectation values of the sliding operator."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bath import BathSpec
from .errors import DegenerateNormalizationError, DegenerateWindowError
from .specfun import QuadControl, DEFAULT_QUAD, sinc
from . import decoherence, dynamics

__all__ = [
    "RingState",
    "WindingTerms",
    "w_isolated",
    "winding_shifts",
    "winding_sets",
    "w_general",
    "w_early",
    "charge_density_amplitude",
    "charge_density",
]

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class WindingTerms:
    """The four winding-summed integrals entering the general expectation value."""

    r1_plus: complex
    r1_minus: complex
    r2_plus: complex
    r2_minus: complex

    def ratio(self) -> complex:
        den = self.r2_plus + self.r2_minus
        if abs(den) < 1e-300:
            raise DegenerateNormalizationError("normalization denominator vanished")
        return (self.r1_plus + self.r1_minus) / den


@dataclass(frozen=True)
class RingState:
    """Initial reduced density matrix rho(theta, phi) on the ring.

    Construct through the classmethods; ``rho(a, b)`` evaluates the kernel
    with both arguments wrapped to [-pi, pi).
    """

    kind: str
    l: int = 0
    theta0: float = 0.0
    sigma: float = 0.0
    grid: np.ndarray | None = field(default=None, repr=False)
    _norm: float = field(default=1.0, repr=False)

    @classmethod
    def ground(cls) -> "RingState":
        return cls(kind="ground")

    @classmethod
    def momentum(cls, l: int) -> "RingState":
        return cls(kind="momentum", l=int(l))

    @classmethod
    def wrapped_gaussian(cls, theta0: float, sigma: float) -> "RingState":
        if not sigma > 0:
            raise ValueError(f"sigma must be positive, got {sigma}")
        state = cls(kind="wrapped-gaussian", theta0=float(theta0), sigma=float(sigma))
        # normalize int |psi|^2 dtheta = 1 on a fine periodic grid
        th = np.linspace(-math.pi, math.pi, 4096, endpoint=False)
        norm_sq = np.mean(state._psi_unnormalized(th) ** 2) * _TWO_PI
        object.__setattr__(state, "_norm", 1.0 / math.sqrt(norm_sq))
        return state

    @classmethod
    def from_grid(cls, rho: np.ndarray) -> "RingState":
        rho = np.asarray(rho, dtype=complex)
        if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
            raise ValueError("grid state requires a square matrix")
        if not np.allclose(rho, rho.conj().T, atol=1e-9):
            raise ValueError("grid density matrix must be Hermitian")
        n = rho.shape[0]
        trace = np.mean(np.real(np.diag(rho))) * _TWO_PI
        if abs(trace - 1.0) > 1e-9:
            raise ValueError(f"grid density matrix trace {trace} != 1")
        return cls(kind="grid", grid=rho)

    def _psi_unnormalized(self, theta):
        theta = np.asarray(theta, dtype=float)
        acc = np.zeros_like(theta)
        for k in range(-3, 4):
            acc += np.exp(-((theta - self.theta0 + _TWO_PI * k) ** 2)
                          / (4.0 * self.sigma**2))
        return acc

    def rho(self, a, b):
        """Density-matrix kernel rho(a, b), 2 pi periodic in both arguments."""
        a = np.asarray(a, dtype=float)
        b = np.asarray(b, dtype=float)
        if self.kind == "ground":
            return np.broadcast_arrays(a, b)[0] * 0j + 1.0 / _TWO_PI
        if self.kind == "momentum":
            return np.exp(1j * self.l * (a - b)) / _TWO_PI
        if self.kind == "wrapped-gaussian":
            psi_a = self._norm * self._psi_unnormalized(
                _wrap(a - self.theta0) + self.theta0)
            psi_b = self._norm * self._psi_unnormalized(
                _wrap(b - self.theta0) + self.theta0)
            return (psi_a * psi_b).astype(complex)
        if self.kind == "grid":
            return self._rho_grid(a, b)
        raise ValueError(f"unknown state kind {self.kind!r}")

    def _rho_grid(self, a, b):
        n = self.grid.shape[0]
        h = _TWO_PI / n
        ia = (np.asarray(a) + math.pi) / h
        ib = (np.asarray(b) + math.pi) / h
        i0 = np.floor(ia).astype(int)
        j0 = np.floor(ib).astype(int)
        fa = ia - i0
        fb = ib - j0
        i0 %= n
        j0 %= n
        i1 = (i0 + 1) % n
        j1 = (j0 + 1) % n
        g = self.grid
        return ((1 - fa) * (1 - fb) * g[i0, j0] + fa * (1 - fb) * g[i1, j0]
                + (1 - fa) * fb * g[i0, j1] + fa * fb * g[i1, j1])

    def trace(self, n: int = 2048) -> float:
        if self.kind == "grid":
            # the native nodes are exact; interpolating between them is not
            return float(np.real(np.mean(np.diag(self.grid))) * _TWO_PI)
        th = np.linspace(-math.pi, math.pi, n, endpoint=False)
        return float(np.real(np.mean(self.rho(th, th))) * _TWO_PI)


def _wrap(x):
    """Wrap angles to [-pi, pi)."""
    return np.mod(np.asarray(x) + math.pi, _TWO_PI) - math.pi


def _periodic_integral(f, rel_tol=1e-8, n0=512, max_doublings=5):
    """Trapezoid rule on the periodic circle, doubling until stable."""
    n = n0
    prev = None
    for _ in range(max_doublings + 1):
        th = np.linspace(-math.pi, math.pi, n, endpoint=False)
        val = np.mean(f(th)) * _TWO_PI
        if prev is not None and abs(val - prev) <= rel_tol * max(1.0, abs(val)):
            return val
        prev = val
        n *= 2
    return prev


def w_isolated(state: RingState, mu: float, t: float) -> complex:
    """Expectation of the sliding operator for the isolated ring.

    <W(t)> = (1/2) int dtheta e^{i theta} [e^{it/2mu} rho(theta + t/mu, theta)
             + rho(theta, theta - t/mu) e^{-it/2mu}].
    """
    if not mu > 0:
        raise ValueError(f"mu must be positive, got {mu}")
    if abs(state.trace() - 1.0) > 1e-6:
        raise ValueError("state is not normalized")
    shift = t / mu
    phase = np.exp(0.5j * t / mu)

    def f(th):
        return 0.5 * np.exp(1j * th) * (
            phase * state.rho(th + shift, th)
            + state.rho(th, th - shift) * np.conj(phase))

    return _periodic_integral(f)


def winding_shifts(n: int, t: float, spec: BathSpec, mu: float) -> tuple[float, float]:
    """Winding-sector shifts f1 = 2 pi n Gdot - G/mu and f2 = 2 pi n Gdot."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    G, Gdot = dynamics.g_fun(spec, t)
    return _TWO_PI * n * Gdot - G / mu, _TWO_PI * n * Gdot


def _admissible(theta: float, c: float, Gdot: float):
    """Integers n with -pi < theta + 2 pi n Gdot - c < pi."""
    lo = (c - math.pi - theta) / (_TWO_PI * Gdot)
    hi = (c + math.pi - theta) / (_TWO_PI * Gdot)
    if Gdot < 0:
        lo, hi = hi, lo
    return set(range(math.floor(lo) + 1, math.ceil(hi)))


def winding_sets(theta: float, t: float, spec: BathSpec, mu: float):
    """Admissible winding integers (S1, S2) for the shifted coordinate window."""
    if not -math.pi <= theta < math.pi:
        raise ValueError(f"theta must lie in [-pi, pi), got {theta}")
    G, Gdot = dynamics.g_fun(spec, t)
    if Gdot == 0.0:
        raise DegenerateWindowError("Gdot(t) = 0: infinitely many admissible windings")
    return (_admissible(theta, G / mu, Gdot), _admissible(theta, 0.0, Gdot))


def _gauss_segment(f, a, b, n=128):
    x, w = np.polynomial.legendre.leggauss(n)
    u = 0.5 * (b - a) * (x + 1.0) + a
    return 0.5 * (b - a) * np.dot(w, f(u))


def _winding_terms(state: RingState, spec: BathSpec, mu: float, inertia: float,
                   t: float, quad_ctl: QuadControl) -> WindingTerms:
    G, Gdot = dynamics.g_fun(spec, t)
    if Gdot == 0.0:
        raise DegenerateWindowError("Gdot(t) = 0: infinitely many admissible windings")
    Gddot = dynamics.g_ddot(spec, t)
    out = []
    for j, c in ((1, G / mu), (2, 0.0)):
        r_plus = 0j
        r_minus = 0j
        # union over theta in (-pi, pi) of the admissible windings
        lo = (c - _TWO_PI) / (_TWO_PI * Gdot)
        hi = (c + _TWO_PI) / (_TWO_PI * Gdot)
        if Gdot < 0:
            lo, hi = hi, lo
        for n in range(math.floor(lo) + 1, math.ceil(hi)):
            f_n = _TWO_PI * n * Gdot - c
            a = max(-math.pi, -math.pi - f_n)
            b = min(math.pi, math.pi - f_n)
            if b <= a:
                continue
            fdot_n = _TWO_PI * n * Gddot - (Gdot / mu if j == 1 else 0.0)
            gam = decoherence.noise_action(_TWO_PI * n, f_n, t, spec, inertia,
                                           quad_ctl)
            damp = math.exp(-gam)
            sector = (-1.0) ** n if j == 1 else 1.0
            phase_half = np.exp(0.5j * mu * f_n * fdot_n)
            i_plus = _gauss_segment(
                lambda th: state.rho(th - f_n, th) * np.exp(-1j * mu * th * fdot_n),
                a, b)
            i_minus = _gauss_segment(
                lambda th: state.rho(th, th + f_n) * np.exp(-1j * mu * th * fdot_n),
                a, b)
            r_plus += sector * damp * phase_half * i_plus
            r_minus += sector * damp * np.conj(phase_half) * i_minus
        out.append((r_plus, r_minus))
    return WindingTerms(r1_plus=out[0][0], r1_minus=out[0][1],
                        r2_plus=out[1][0], r2_minus=out[1][1])


def w_general(state: RingState, spec: BathSpec, mu: float, inertia: float,
              t: float, quad_ctl: QuadControl = DEFAULT_QUAD) -> complex:
    """General winding-summed expectation value of the sliding operator."""
    if not t > 0:
        raise ValueError(f"t must be positive, got {t}")
    if abs(state.trace() - 1.0) > 1e-6:
        raise ValueError("state is not normalized")
    return _winding_terms(state, spec, mu, inertia, t, quad_ctl).ratio()


def w_early(state: RingState, spec: BathSpec, mu: float, t: float) -> complex:
    """Early-time approximation: valid while t stays well below tau_Q.

    The winding segments tile the full circle, so the theta integral runs
    over one period and the sector-independent damping factor e^{-Gamma}
    multiplies the result; the denominator reduces to 2.
    """
    gam = decoherence.gamma_early(spec, mu, t)
    G, Gdot = dynamics.g_fun(spec, t)
    shift = G / mu
    half_phase = np.exp(-0.5j * G * Gdot / mu)

    def f(th):
        return (state.rho(th, th - shift) * half_phase
                + state.rho(th + shift, th) * np.conj(half_phase)) * np.exp(
                    1j * th * Gdot)

    return 0.5 * math.exp(-gam) * _periodic_integral(f)


def charge_density_amplitude(spec: BathSpec, mu: float, n1: float,
                             t: float) -> float:
    """Oscillating charge-density amplitude n1 sinc(pi Gdot) cos(Gdot G / 2mu) e^-Gamma."""
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    if t == 0.0:
        # Gdot(0) = 1 makes the sinc factor an exact zero
        return 0.0
    G, Gdot = dynamics.g_fun(spec, t)
    gam = decoherence.gamma_early(spec, mu, t)
    return float(n1 * sinc(math.pi * Gdot) * math.cos(0.5 * Gdot * G / mu)
                 * math.exp(-gam))


def charge_density(x: float, t: float, n0: float, n1: float, kF: float,
                   spec: BathSpec, mu: float) -> float:
    """Charge density n(x, t) = n0 + n1_osc(t) cos(2 kF x)."""
    return n0 + charge_density_amplitude(spec, mu, n1, t) * math.cos(2.0 * kF * x)
