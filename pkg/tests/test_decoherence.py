"""Tests for the noise action, its closed form, and the decoherence timescales."""

import math

import numpy as np
import pytest

from cdwring.bath import BathSpec
from cdwring.constants import HBAR
from cdwring.decoherence import (
    GammaResult,
    noise_action,
    gamma_early,
    gamma_early_lowT,
    tau_decoh,
    tau_Q,
    lattice_points,
)
from cdwring.errors import RootNotFoundError
from cdwring import dynamics, ring

MU = 1e-8
PERIOD = 4.0 * math.pi * MU
FIG4 = BathSpec(s=1.2, g_s=1.0, Omega=1.0 / MU, T=0.0)


class TestGammaResult:
    def test_accepts_non_negative(self):
        GammaResult(t=1.0, gamma=0.0, method="general-quadrature")

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            GammaResult(t=1.0, gamma=-1e-3, method="general-quadrature")


class TestNoiseAction:
    def test_zero_path_gives_zero(self):
        assert noise_action(0.0, 0.0, 1.0, FIG4, HBAR * MU) == 0.0

    def test_vanishing_coupling(self):
        weak = BathSpec(s=1.2, g_s=1e-12, Omega=1.0 / MU, T=0.0)
        val = noise_action(2.0 * math.pi, 1.0, PERIOD, weak, HBAR * MU)
        assert 0.0 <= val < 1e-12

    def test_early_time_reduction(self):
        # with the winding-sector boundary substitution, the exact noise
        # action reduces to the early-time quadrature form at small t
        # the dominant path climbs by G(t)/mu ~ t/mu; with boundaries
        # (0, G(t)/mu) the classical path is the linear ramp u/mu
        inertia = HBAR * MU
        for t in (0.25 * PERIOD, PERIOD, 2.0 * PERIOD):
            G, _ = dynamics.g_fun(FIG4, t)
            exact = noise_action(G / MU, 0.0, t, FIG4, inertia)
            approx = gamma_early(FIG4, MU, t)
            assert exact == pytest.approx(approx, rel=1e-2)

    def test_requires_positive_time(self):
        with pytest.raises(ValueError):
            noise_action(1.0, 0.0, 0.0, FIG4, HBAR * MU)


class TestGammaEarly:
    def test_zero_at_origin(self):
        assert gamma_early(FIG4, MU, 0.0) == 0.0

    @pytest.mark.parametrize("s", [0.5, 1.0, 1.2])
    def test_monotone_in_time(self, s):
        spec = BathSpec(s=s, g_s=1.0, Omega=1.0 / MU, T=0.0)
        grid = np.linspace(0.0, 10.0 * PERIOD, 200)
        vals = [gamma_early(spec, MU, float(t)) for t in grid]
        assert all(v >= 0.0 for v in vals)
        assert all(b >= a * (1.0 - 1e-10) for a, b in zip(vals, vals[1:]))

    def test_monotone_in_temperature(self):
        t = PERIOD
        vals = [gamma_early(BathSpec(s=1.2, g_s=1.0, Omega=1.0 / MU, T=T),
                            MU, t)
                for T in (0.0, 1e-4, 1e-2, 1.0)]
        assert all(b >= a * (1.0 - 1e-12) for a, b in zip(vals, vals[1:]))

    def test_matches_closed_form_fig4_scale(self):
        assert gamma_early(FIG4, MU, PERIOD) == pytest.approx(
            gamma_early_lowT(FIG4, MU, PERIOD), rel=1e-6)

    def test_matches_closed_form_random_pairs(self):
        rng = np.random.default_rng(19)
        for _ in range(30):
            s = rng.uniform(0.3, 1.8)
            t = rng.uniform(0.05, 20.0) * PERIOD
            spec = BathSpec(s=s, g_s=1.0, Omega=1.0 / MU, T=0.0)
            a = gamma_early(spec, MU, t)
            b = gamma_early_lowT(spec, MU, t)
            assert a == pytest.approx(b, rel=1e-6)

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            gamma_early(FIG4, MU, -1.0)
        with pytest.raises(ValueError):
            gamma_early(FIG4, 0.0, 1.0)


class TestGammaEarlyLowT:
    def test_zero_at_origin(self):
        assert gamma_early_lowT(FIG4, MU, 0.0) == 0.0

    def test_s1_removable_singularity(self):
        spec = BathSpec(s=1.0, g_s=1.0, Omega=1.0 / MU, T=0.0)
        for t in (0.3 * PERIOD, PERIOD, 5.0 * PERIOD):
            closed = gamma_early_lowT(spec, MU, t)
            quad = gamma_early(spec, MU, t)
            assert closed == pytest.approx(quad, rel=1e-6)

    def test_linear_in_coupling(self):
        strong = BathSpec(s=1.2, g_s=3.0, Omega=1.0 / MU, T=0.0)
        assert gamma_early_lowT(strong, MU, PERIOD) == pytest.approx(
            3.0 * gamma_early_lowT(FIG4, MU, PERIOD), rel=1e-12)


class TestTauDecoh:
    def test_fig4_value_stable(self):
        coarse = tau_decoh(FIG4, MU, rel_tol=1e-6)
        fine = tau_decoh(FIG4, MU, rel_tol=5e-7)
        assert coarse == pytest.approx(fine, rel=1e-5)
        # a few periods' worth of visible oscillations before decoherence
        n_periods = coarse / PERIOD
        assert 10.0 < n_periods < 1e4

    def test_doubling_coupling_decreases(self):
        strong = BathSpec(s=1.2, g_s=2.0, Omega=1.0 / MU, T=0.0)
        assert tau_decoh(strong, MU) < tau_decoh(FIG4, MU)

    def test_no_coupling_not_found(self):
        weak = BathSpec(s=1.2, g_s=1e-30, Omega=1.0 / MU, T=0.0)
        with pytest.raises(RootNotFoundError):
            tau_decoh(weak, MU, horizon_factor=1e3)


class TestTauQ:
    def test_min_rule(self):
        # super-ohmic at these scales: damping is far slower than decoherence
        td = dynamics.tau_damp(FIG4)
        tdec = tau_decoh(FIG4, MU)
        assert tau_Q(FIG4, MU) == pytest.approx(min(td, tdec), rel=1e-9)
        assert tdec < td

    def test_falls_back_when_damping_missing(self, monkeypatch):
        def no_damp(spec):
            raise RootNotFoundError("forced miss")

        monkeypatch.setattr(dynamics, "tau_damp", no_damp)
        val = tau_Q(FIG4, MU)
        assert val == pytest.approx(tau_decoh(FIG4, MU), rel=1e-6)

    def test_both_missing_propagates(self, monkeypatch):
        def no_damp(spec):
            raise RootNotFoundError("forced miss")

        monkeypatch.setattr(dynamics, "tau_damp", no_damp)
        weak = BathSpec(s=1.2, g_s=1e-30, Omega=1.0 / MU, T=0.0)
        with pytest.raises(RootNotFoundError):
            tau_Q(weak, MU)

    def test_lattice_points(self):
        assert lattice_points(FIG4, MU) == pytest.approx(
            tau_Q(FIG4, MU) / PERIOD, rel=1e-12)
