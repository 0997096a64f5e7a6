"""Tests for path loss, Nakagami fading, topology and channel generation."""

import numpy as np
import pytest

from ris_selection.channel.fading import (
    nakagami_cdf, nakagami_coefficients, nakagami_pdf, sample_nakagami,
)
from ris_selection.channel.generator import ChannelGenerator, element_surface_index
from ris_selection.channel.pathloss import (
    db_to_linear, los_pathloss_db, noise_power_w, umi_pathloss_db,
)
from ris_selection.channel.topology import draw_topology, surface_positions
from ris_selection.numerics.random import RngStream
from ris_selection.numerics.stats import ks_distance


class TestPathLoss:
    """Tests for the UMi and LOS path-loss laws."""

    def test_umi_reference_distance(self):
        """Test the UMi loss at 1 m."""
        assert umi_pathloss_db(1.0, 2.0) == pytest.approx(-22.7 - 26.0 * np.log10(2.0))

    def test_umi_slope(self):
        """Test the per-decade slope of the UMi law."""
        drop = umi_pathloss_db(10.0, 2.0) - umi_pathloss_db(100.0, 2.0)
        assert drop == pytest.approx(36.7)

    def test_umi_array_input(self):
        """Test that distances can be passed as an array."""
        out = umi_pathloss_db(np.array([1.0, 10.0, 100.0]), 2.0)
        assert out.shape == (3,)
        assert np.all(np.diff(out) < 0)

    def test_below_reference_distance_rejected(self):
        """Test that distances under 1 m are refused."""
        with pytest.raises(ValueError, match="reference distance"):
            umi_pathloss_db(0.5, 2.0)
        with pytest.raises(ValueError):
            los_pathloss_db(np.array([2.0, 0.9]), 2.0, -30.0)

    def test_los_free_space(self):
        """Test the LOS law against the free-space formula."""
        assert los_pathloss_db(90.0, 2.0, -30.0) == pytest.approx(-30.0 - 20.0 * np.log10(90.0))
        assert los_pathloss_db(1.0, 3.0, -30.0) == pytest.approx(-30.0)

    def test_noise_power(self):
        """Test the thermal noise power for the default bandwidth and noise figure."""
        # -174 dBm/Hz + 70 dB + 9 dB = -95 dBm
        assert noise_power_w(10e6, -174.0, 9.0) == pytest.approx(10 ** (-12.5), rel=1e-12)

    def test_db_to_linear(self):
        np.testing.assert_allclose(db_to_linear([0.0, 10.0, -30.0]), [1.0, 10.0, 1e-3])


class TestNakagami:
    """Tests for Nakagami-m amplitude fading."""

    def test_moments_and_ks(self):
        """Test second moment and KS fit of the sampler."""
        x = sample_nakagami(2.5, 1.0, RngStream(seed=42), size=100_000)
        assert np.mean(x ** 2) == pytest.approx(1.0, rel=0.01)
        assert np.mean(x ** 4) == pytest.approx(1.4, rel=0.02)
        assert ks_distance(x, lambda v: nakagami_cdf(v, 2.5, 1.0)) < 0.01

    def test_m_one_is_rayleigh(self):
        """Test that m = 1 gives the Rayleigh CDF."""
        x = np.linspace(0.0, 4.0, 41)
        np.testing.assert_allclose(nakagami_cdf(x, 1.0, 1.5), 1.0 - np.exp(-x ** 2 / 1.5),
                                   atol=1e-12)

    def test_pdf_integrates_to_one(self):
        """Test that the PDF has unit mass."""
        x = np.linspace(0.0, 6.0, 60_001)
        pdf = nakagami_pdf(x, 2.5, 1.0)
        assert np.sum(pdf) * (x[1] - x[0]) == pytest.approx(1.0, abs=1e-4)

    def test_pdf_matches_cdf_derivative(self):
        """Test the PDF against a numerical derivative of the CDF."""
        x = np.linspace(0.2, 2.0, 10)
        h = 1e-6
        numeric = (nakagami_cdf(x + h, 3.0, 0.7) - nakagami_cdf(x - h, 3.0, 0.7)) / (2 * h)
        np.testing.assert_allclose(nakagami_pdf(x, 3.0, 0.7), numeric, rtol=1e-5)

    def test_scalar_draw_is_positive_float(self):
        """Test that a scalar draw is a positive float."""
        x = sample_nakagami(0.5, 2.0, RngStream(seed=1))
        assert isinstance(x, float)
        assert x > 0

    def test_invalid_parameters(self):
        """Test that non-positive m or omega are rejected."""
        with pytest.raises(ValueError):
            sample_nakagami(0.0, 1.0, RngStream(seed=1))
        with pytest.raises(ValueError):
            nakagami_cdf(1.0, 2.0, -1.0)

    def test_coefficients_follow_omega(self):
        """Test that complex coefficients carry the requested mean power."""
        omega = np.array([1e-6, 1.0])[:, None] * np.ones((2, 50_000))
        h = nakagami_coefficients(2.5, omega, RngStream(seed=9))
        power = np.mean(np.abs(h) ** 2, axis=1)
        np.testing.assert_allclose(power, [1e-6, 1.0], rtol=0.02)
        # uniform phase: zero mean
        assert abs(np.mean(h[1])) < 0.02


class TestTopology:
    """Tests for user and surface placement."""

    def test_surfaces_on_ring(self):
        """Test that surfaces sit at equal angles on the ring."""
        pos = surface_positions(4, 90.0)
        np.testing.assert_allclose(np.hypot(pos[:, 0], pos[:, 1]), 90.0)
        np.testing.assert_allclose(pos[0], [90.0, 0.0])
        np.testing.assert_allclose(pos[1], [0.0, 90.0], atol=1e-12)

    def test_users_inside_cell_and_clear_of_nodes(self, desk_config):
        """Test that users stay in the cell and at least 1 m from every node."""
        cfg = desk_config(n_users=4)
        for t in range(50):
            geom = draw_topology(cfg, RngStream(seed=t))
            assert geom.users.shape == (4, 2)
            assert np.all(geom.user_distances() <= cfg.cell_radius_m)
            assert np.all(geom.user_distances() >= 1.0)
            assert np.all(geom.surface_user_distances() >= 1.0)

    def test_users_uniform_over_disc(self, desk_config):
        """Test that mean squared user distance is R^2 / 2."""
        cfg = desk_config(n_users=4)
        r2 = np.concatenate([draw_topology(cfg, RngStream(seed=t)).user_distances() ** 2
                             for t in range(5000)])
        assert r2.mean() == pytest.approx(cfg.cell_radius_m ** 2 / 2, rel=0.02)

    def test_deterministic(self, desk_config):
        """Test that the same stream gives the same drop."""
        cfg = desk_config()
        a = draw_topology(cfg, RngStream(seed=5, index=3))
        b = draw_topology(cfg, RngStream(seed=5, index=3))
        np.testing.assert_array_equal(a.users, b.users)


class TestChannelGenerator:
    """Tests for full channel realizations."""

    def test_shapes(self, desk_config):
        """Test the shapes of F, g and d."""
        cfg = desk_config()
        geom, real = ChannelGenerator(cfg).draw(0)
        assert real.F.shape == (16, 4)
        assert real.g.shape == (4, 16)
        assert real.d.shape == (4, 4)
        assert geom.surfaces.shape == (2, 2)
        assert real.noise_power == pytest.approx(10 ** (-12.5))

    def test_seed_and_trial_determine_realization(self, desk_config):
        """Test that (seed, trial) fixes the realization."""
        gen = ChannelGenerator(desk_config(seed=3))
        _, a = gen.draw(7)
        _, b = gen.draw(7)
        _, c = gen.draw(8)
        np.testing.assert_array_equal(a.F, b.F)
        np.testing.assert_array_equal(a.g, b.g)
        assert not np.array_equal(a.d, c.d)

    def test_element_surface_index(self, desk_config):
        """Test the element to surface mapping."""
        cfg = desk_config(elements_per_surface="3,5")
        np.testing.assert_array_equal(element_surface_index(cfg), [0, 0, 0, 1, 1, 1, 1, 1])

    def test_bs_ris_power_matches_los_law(self, desk_config):
        """Test that BS-RIS channel power follows the LOS law."""
        cfg = desk_config(n_surfaces=1, elements_per_surface=500, schemes="ao")
        _, real = ChannelGenerator(cfg).draw(0)
        expected = db_to_linear(los_pathloss_db(cfg.ris_ring_radius_m, cfg.pathloss_exponent,
                                                cfg.ref_loss_db))
        assert np.mean(np.abs(real.F) ** 2) == pytest.approx(float(expected), rel=0.1)

