"""Tests for alternating optimization of phases and beamformer."""

import numpy as np
import pytest

from ris_selection.beamforming.effective import effective_channel, gamma_max
from ris_selection.errors import NumericalError
from ris_selection.models.beam import Beamformer
from ris_selection.models.optimization import AoStep
from ris_selection.optimization.ao import ao_init, ao_iterate, fallback_init, phase_update


class TestInitialization:
    """Tests for the AO starting beamformers."""

    def test_mrt_on_direct_link(self):
        """Test that the first beam is MRT on the direct link."""
        d = np.array([3.0, 4.0j])
        w = ao_init(d)
        np.testing.assert_allclose(w.w, np.conj(d) / 5.0)

    def test_blocked_direct_link(self):
        """Test that a zero direct link is refused by ao_init."""
        with pytest.raises(NumericalError, match="blocked"):
            ao_init(np.zeros(3))

    def test_fallback_uses_reflected_path(self, make_realization):
        """Test that the fallback beam matches the zero-phase reflected path."""
        real = make_realization(n_bs=3, n_elements=6, block_direct=True)
        g, _ = real.link(0)
        w = fallback_init(g, real.F)
        r = g @ real.F
        assert abs(r @ w.w) == pytest.approx(np.linalg.norm(r))

    def test_fallback_when_everything_vanishes(self):
        """Test the first-antenna beam when no path carries energy."""
        w = fallback_init(np.zeros(4), np.ones((4, 2)))
        np.testing.assert_array_equal(w.w, [1.0, 0.0])


class TestPhaseUpdate:
    """Tests for the closed-form phase step."""

    def test_aligns_all_paths(self, make_realization):
        """Test that every reflected term adds in phase with the direct term."""
        real = make_realization(n_bs=4, n_elements=10, seed=1)
        g, d = real.link(0)
        w = ao_init(d)
        phases = phase_update(g, real.F, w, d)
        h = effective_channel(g, phases, real.F, d)
        expected = np.sum(np.abs(g * (real.F @ w.w))) + abs(d @ w.w)
        assert abs(h @ w.w) == pytest.approx(expected, rel=1e-12)

    def test_phases_in_range(self, make_realization):
        """Test that phases are wrapped into [0, 2pi)."""
        real = make_realization(n_bs=2, n_elements=30, seed=2)
        g, d = real.link(0)
        phases = phase_update(g, real.F, ao_init(d), d)
        assert np.all(phases.theta >= 0.0)
        assert np.all(phases.theta < 2 * np.pi)


class TestAoIterate:
    """Tests for the full alternating loop."""

    def test_trace_layout(self, make_realization):
        """Test the INIT, PHASE, BEAM ordering of the trace."""
        outcome = ao_iterate(make_realization(), 0, 3, 1.0)
        steps = [s.step for s in outcome.trace]
        assert steps == [AoStep.INIT] + [AoStep.PHASE, AoStep.BEAM] * 3
        assert [s.iteration for s in outcome.trace] == [0, 1, 1, 2, 2, 3, 3]
        assert not outcome.flagged

    def test_trace_monotone_and_converging(self, make_realization):
        """Test that the objective never drops and settles within a few iterations."""
        improvements = []
        for seed in range(100):
            outcome = ao_iterate(make_realization(n_bs=4, n_elements=16, seed=seed), 0, 10, 1.0)
            obj = outcome.objectives
            assert np.all(np.diff(obj) >= -1e-12 * obj[-1])
            # objective after iteration i is at trace index 2i
            improvements.append((obj[20] - obj[6]) / obj[20])
        assert np.median(improvements) < 1e-3

    def test_gain_is_final_objective(self, make_realization):
        """Test that the reported gain is the last traced objective."""
        outcome = ao_iterate(make_realization(seed=5), 0, 3, 1.0)
        # the final half-step is MRT, so |h w|^2 = ||h||^2
        assert outcome.gain == pytest.approx(outcome.objectives[-1], rel=1e-12)
        assert outcome.rate == pytest.approx(np.log2(1 + outcome.gain))

    def test_bounded_by_ideal(self, make_realization):
        """Test that AO never exceeds the per-antenna alignment bound."""
        for seed in range(500):
            real = make_realization(n_bs=4, n_elements=16, seed=seed)
            g, d = real.link(0)
            outcome = ao_iterate(real, 0, 3, 1.0)
            assert outcome.gain <= gamma_max(g, real.F, d) + 1e-9

    def test_single_antenna_exact(self, make_realization):
        """Test that AO reaches the bound with one BS antenna."""
        for seed in range(100):
            M = 1 + seed % 64
            real = make_realization(n_bs=1, n_elements=M, seed=seed)
            g, d = real.link(0)
            outcome = ao_iterate(real, 0, 3, 1.0)
            assert outcome.gain == pytest.approx(gamma_max(g, real.F, d), rel=1e-9)

    def test_blocked_direct_link_flagged(self, make_realization):
        """Test that a blocked direct link falls back and is flagged."""
        real = make_realization(n_bs=4, n_elements=16, seed=3, block_direct=True)
        outcome = ao_iterate(real, 0, 3, 1.0)
        assert outcome.flagged
        assert outcome.gain > 0.0
        assert np.all(np.diff(outcome.objectives) >= -1e-12 * outcome.objectives[-1])

    def test_tolerance_stops_early(self, make_realization):
        """Test early stopping on relative improvement."""
        real = make_realization(n_bs=4, n_elements=16, seed=4)
        full = ao_iterate(real, 0, 50, 1.0)
        early = ao_iterate(real, 0, 50, 1.0, tolerance=1e-6)
        assert len(early.trace) < len(full.trace)
        assert early.gain == pytest.approx(full.gain, rel=1e-3)

    def test_selects_requested_user(self, make_realization):
        """Test that AO optimizes the user it was asked for."""
        real = make_realization(n_users=3, seed=6)
        a = ao_iterate(real, 2, 3, 1.0)
        g, d = real.link(2)
        h = effective_channel(g, a.phases, real.F, d)
        assert a.gain == pytest.approx(np.vdot(h, h).real)

    def test_rejects_zero_iterations(self, make_realization):
        with pytest.raises(ValueError):
            ao_iterate(make_realization(), 0, 0, 1.0)

    def test_beamformer_unit_norm(self, make_realization):
        """Test that the returned beam has unit norm."""
        outcome = ao_iterate(make_realization(seed=9), 0, 3, 1.0)
        assert isinstance(outcome.beamformer, Beamformer)
        assert np.linalg.norm(outcome.beamformer.w) == pytest.approx(1.0)
