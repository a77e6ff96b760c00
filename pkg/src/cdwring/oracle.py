"""Brute-force ground truth: explicit discretized bath and direct-sum kernels."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bath import BathSpec
from .constants import HBAR, K_B

__all__ = [
    "DiscreteBath",
    "discretize_bath",
    "simulate_bath_ode",
    "noise_kernel_direct",
    "total_energy",
    "sample_noise",
]


@dataclass(frozen=True)
class DiscreteBath:
    """Explicit oscillator modes {omega_j, C_j} with common mass and ring inertia."""

    omegas: np.ndarray
    couplings: np.ndarray
    mass: float
    inertia: float

    def __post_init__(self):
        om = np.asarray(self.omegas, dtype=float)
        C = np.asarray(self.couplings, dtype=float)
        if om.shape != C.shape:
            raise ValueError("omegas and couplings must have matching shapes")
        if np.any(om <= 0):
            raise ValueError("all mode frequencies must be positive")
        if np.any(C < 0):
            raise ValueError("couplings must be non-negative")


def discretize_bath(spec: BathSpec, inertia: float, n_modes: int,
                    mass: float = 1.0) -> DiscreteBath:
    """Uniform midpoint discretization of the power-law spectral density.

    C_j^2 = (2/pi) m omega_j J(omega_j) dω inverts the delta-sum definition
    of J so the mode sum reproduces the integral to second order in dω.
    """
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    dw = spec.Omega / n_modes
    omegas = (np.arange(n_modes) + 0.5) * dw
    J = inertia * spec.g_s * omegas**spec.s
    couplings = np.sqrt(2.0 / math.pi * mass * omegas * J * dw)
    return DiscreteBath(omegas=omegas, couplings=couplings,
                        mass=mass, inertia=inertia)


def _rhs(bath: DiscreteBath, theta, thetadot, R, Rdot):
    disp = R - bath.couplings * theta / (bath.mass * bath.omegas**2)
    acc_theta = np.dot(bath.couplings, disp) / bath.inertia
    acc_R = -bath.omegas**2 * R + bath.couplings * theta / bath.mass
    return thetadot, acc_theta, Rdot, acc_R


def simulate_bath_ode(bath: DiscreteBath, theta0: float, thetadot0: float,
                      t_grid, R0=None, Rdot0=None,
                      steps_per_cutoff_period: int = 50,
                      return_final_state: bool = False):
    """Fixed-step RK4 integration of the ring + discrete-bath equations of motion.

    With the bath initially at rest at the origin the trajectory approaches
    G(t) thetadot0 + Gdot(t) theta0 as the mode count grows.  The step is
    held at or below 2 pi / (steps_per_cutoff_period * max omega).
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if np.any(np.diff(t_grid) <= 0) or t_grid[0] < 0:
        raise ValueError("t_grid must be non-negative and strictly increasing")
    n_modes = bath.omegas.size
    recurrence = 2.0 * math.pi * n_modes / bath.omegas.max()
    if t_grid[-1] > recurrence:
        raise ValueError(
            f"t_grid extends past the Poincare recurrence time {recurrence:.3e}")
    h_max = 2.0 * math.pi / (steps_per_cutoff_period * bath.omegas.max())

    theta = float(theta0)
    thetadot = float(thetadot0)
    R = np.zeros(n_modes) if R0 is None else np.array(R0, dtype=float)
    Rdot = np.zeros(n_modes) if Rdot0 is None else np.array(Rdot0, dtype=float)

    out = np.empty(t_grid.size)
    t = 0.0
    for i, t_target in enumerate(t_grid):
        span = t_target - t
        if span > 0:
            n_steps = max(1, math.ceil(span / h_max))
            h = span / n_steps
            for _ in range(n_steps):
                k1 = _rhs(bath, theta, thetadot, R, Rdot)
                k2 = _rhs(bath, theta + 0.5 * h * k1[0], thetadot + 0.5 * h * k1[1],
                          R + 0.5 * h * k1[2], Rdot + 0.5 * h * k1[3])
                k3 = _rhs(bath, theta + 0.5 * h * k2[0], thetadot + 0.5 * h * k2[1],
                          R + 0.5 * h * k2[2], Rdot + 0.5 * h * k2[3])
                k4 = _rhs(bath, theta + h * k3[0], thetadot + h * k3[1],
                          R + h * k3[2], Rdot + h * k3[3])
                theta += h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0])
                thetadot += h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])
                R = R + h / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])
                Rdot = Rdot + h / 6.0 * (k1[3] + 2 * k2[3] + 2 * k3[3] + k4[3])
            t = t_target
        out[i] = theta
    if return_final_state:
        return out, (theta, thetadot, R, Rdot)
    return out


def total_energy(bath: DiscreteBath, theta, thetadot, R, Rdot) -> float:
    """Conserved energy of the ring + bath system."""
    disp = R - bath.couplings * theta / (bath.mass * bath.omegas**2)
    return (0.5 * bath.inertia * thetadot**2
            + 0.5 * bath.mass * np.dot(Rdot, Rdot)
            + 0.5 * bath.mass * np.dot(bath.omegas**2, disp * disp))


def noise_kernel_direct(bath: DiscreteBath, T: float, t: float) -> float:
    """Direct mode sum for alpha_R(t)."""
    weights = bath.couplings**2 / (2.0 * bath.mass * bath.omegas)
    if T > 0:
        weights = weights / np.tanh(HBAR * bath.omegas / (2.0 * K_B * T))
    return float(np.dot(weights, np.cos(bath.omegas * t)))


def sample_noise(bath: DiscreteBath, T: float, t_grid, rng,
                 n_samples: int = 1) -> np.ndarray:
    """Classical thermal realizations of the fluctuating force xi(t).

    Initial bath coordinates are drawn from the classical equilibrium of the
    displaced oscillators; valid as an alpha_R check only in the high-T
    (classical) regime.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    sigma_R = np.sqrt(K_B * T / (bath.mass * bath.omegas**2))
    sigma_P = np.sqrt(K_B * T * bath.mass)
    out = np.empty((n_samples, t_grid.size))
    coswt = np.cos(np.outer(t_grid, bath.omegas))
    sinwt = np.sin(np.outer(t_grid, bath.omegas))
    for i in range(n_samples):
        R0 = rng.normal(0.0, sigma_R)
        P0 = rng.normal(0.0, sigma_P)
        out[i] = coswt @ (bath.couplings * R0) + sinwt @ (
            bath.couplings * P0 / (bath.mass * bath.omegas))
    return out
