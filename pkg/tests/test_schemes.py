"""Tests for the per-realization scheme evaluators."""

import numpy as np
import pytest

from ris_selection.beamforming.effective import effective_channel, select_user
from ris_selection.beamforming.precoding import rate_bpshz
from ris_selection.channel.generator import ChannelGenerator
from ris_selection.models.system import ALL_SCHEMES, ChannelRealization, FdmaAnchor, SchemeId
from ris_selection.optimization.ao import ao_iterate
from ris_selection.schemes.runner import SchemeRunner, SchemeStreams


@pytest.fixture
def desk_trial(desk_config):
    cfg = desk_config()
    _, realization = ChannelGenerator(cfg).draw(0)
    return cfg, realization


class TestSchemeRunner:
    """Tests for the five scheme evaluators."""

    def test_dispatch_all_schemes(self, desk_trial):
        """Test dispatch and the selected-user field for every scheme."""
        cfg, real = desk_trial
        runner = SchemeRunner(cfg)
        streams = SchemeStreams.for_trial(cfg.seed, 0)
        k_star = select_user(real)
        for scheme in ALL_SCHEMES:
            result = runner.run(scheme, real, streams)
            assert result.scheme == scheme
            assert result.sum_throughput_bps > 0
            assert result.wall_time_s >= 0
            if scheme.selects_user:
                assert result.selected_user == k_star
            else:
                assert result.selected_user is None

    def test_ideal_bounds_us_schemes(self, desk_config):
        """Test that US-Ideal bounds US-AO and US-JO."""
        cfg = desk_config()
        runner = SchemeRunner(cfg)
        gen = ChannelGenerator(cfg)
        for trial in range(20):
            _, real = gen.draw(trial)
            streams = SchemeStreams.for_trial(cfg.seed, trial)
            ideal = runner.run_us_ideal(real).sum_throughput_bps
            assert runner.run_us_ao(real).sum_throughput_bps <= ideal * (1 + 1e-12)
            assert runner.run_us_jo(real, streams.jo).sum_throughput_bps <= ideal * (1 + 1e-12)

    def test_tdma_averages_per_user_rates(self, desk_trial):
        """Test that TDMA averages the per-user AO rates."""
        cfg, real = desk_trial
        runner = SchemeRunner(cfg)
        rates = [ao_iterate(real, k, cfg.ao_iterations, cfg.tx_power_w).rate
                 for k in range(cfg.n_users)]
        expected = cfg.bandwidth_hz * np.mean(rates)
        assert runner.run_tdma(real).sum_throughput_bps == pytest.approx(expected, rel=1e-12)

    def test_single_user_schemes_coincide(self, desk_config):
        """Test that US-AO, TDMA and FDMA agree for K = 1."""
        cfg = desk_config(n_users=1)
        _, real = ChannelGenerator(cfg).draw(2)
        runner = SchemeRunner(cfg)
        streams = SchemeStreams.for_trial(cfg.seed, 2)
        ao = runner.run_us_ao(real).sum_throughput_bps
        assert runner.run_tdma(real).sum_throughput_bps == pytest.approx(ao, rel=1e-12)
        assert runner.run_fdma(real, streams.fdma).sum_throughput_bps == pytest.approx(ao, rel=1e-12)

    def test_fdma_best_anchor(self, desk_config):
        """Test that the best anchor is the selected user."""
        cfg = desk_config(fdma_anchor="best")
        _, real = ChannelGenerator(cfg).draw(4)
        runner = SchemeRunner(cfg)
        assert runner.cfg.fdma_anchor == FdmaAnchor.BEST
        streams = SchemeStreams.for_trial(cfg.seed, 4)
        assert runner.fdma_anchor(real, streams.fdma) == select_user(real)

    def test_fdma_anchor_term_equals_tdma_slot(self, desk_config):
        """Test that the FDMA anchor's sub-band rate equals its TDMA slot rate."""
        cfg = desk_config()
        runner = SchemeRunner(cfg)
        gen = ChannelGenerator(cfg)
        K = cfg.n_users
        for trial in range(10):
            _, real = gen.draw(trial)
            anchor = runner.fdma_anchor(real, SchemeStreams.for_trial(cfg.seed, trial).fdma)
            slot = ao_iterate(real, anchor, runner.ao.iterations, cfg.tx_power_w,
                              runner.ao.tolerance)
            g, d = real.link(anchor)
            h = effective_channel(g, slot.phases, real.F, d)
            term = rate_bpshz(float(np.real(np.vdot(h, h))), cfg.tx_power_w / K,
                              real.noise_power / K)
            assert term == pytest.approx(slot.rate, rel=1e-12)

    def test_tdma_identical_users(self, desk_config):
        """Test that TDMA over two copies of one user equals that user's rate."""
        cfg = desk_config(n_users=2)
        _, real = ChannelGenerator(cfg).draw(1)
        twin = ChannelRealization(F=real.F, g=np.vstack([real.g[0], real.g[0]]),
                                  d=np.vstack([real.d[0], real.d[0]]),
                                  noise_power=real.noise_power)
        runner = SchemeRunner(cfg)
        single = ao_iterate(twin, 0, runner.ao.iterations, cfg.tx_power_w, runner.ao.tolerance)
        expected = cfg.bandwidth_hz * single.rate
        assert runner.run_tdma(twin).sum_throughput_bps == pytest.approx(expected, rel=1e-12)

    def test_tdma_invariant_under_relabeling(self, desk_trial):
        """Test that permuting users leaves TDMA unchanged."""
        cfg, real = desk_trial
        perm = [2, 0, 3, 1]
        relabeled = ChannelRealization(F=real.F, g=real.g[perm], d=real.d[perm],
                                       noise_power=real.noise_power)
        runner = SchemeRunner(cfg)
        assert (runner.run_tdma(relabeled).sum_throughput_bps
                == pytest.approx(runner.run_tdma(real).sum_throughput_bps, rel=1e-12))

    def test_fdma_random_anchor_reproducible(self, desk_trial):
        """Test that the random anchor is fixed by the trial stream."""
        cfg, real = desk_trial
        runner = SchemeRunner(cfg)
        a = runner.fdma_anchor(real, SchemeStreams.for_trial(cfg.seed, 0).fdma)
        b = runner.fdma_anchor(real, SchemeStreams.for_trial(cfg.seed, 0).fdma)
        assert a == b
        assert 0 <= a < cfg.n_users

    def test_jo_reproducible_per_trial(self, desk_trial):
        """Test that US-JO is fixed by the trial stream."""
        cfg, real = desk_trial
        runner = SchemeRunner(cfg)
        a = runner.run_us_jo(real, SchemeStreams.for_trial(cfg.seed, 0).jo)
        b = runner.run_us_jo(real, SchemeStreams.for_trial(cfg.seed, 0).jo)
        assert a.sum_throughput_bps == b.sum_throughput_bps

    def test_unknown_scheme(self, desk_trial):
        """Test that an unknown scheme raises."""
        cfg, real = desk_trial
        with pytest.raises(ValueError):
            SchemeRunner(cfg).run("ofdma", real, SchemeStreams.for_trial(0, 0))

    def test_scheme_labels(self):
        assert SchemeId.parse("ao") == SchemeId.US_AO
        assert SchemeId.parse("US_Ideal") == SchemeId.US_IDEAL
        assert SchemeId.TDMA.label == "TDMA"
        assert not SchemeId.FDMA.selects_user
