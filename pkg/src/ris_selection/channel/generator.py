"""Channel realizations for a fixed geometry."""

from typing import Tuple

import numpy as np

from ris_selection.channel.fading import nakagami_coefficients
from ris_selection.channel.pathloss import (
    db_to_linear, los_pathloss_db, noise_power_w, umi_pathloss_db,
)
from ris_selection.channel.topology import draw_topology
from ris_selection.errors import DimensionError
from ris_selection.models.system import ChannelRealization, Geometry, SystemConfig
from ris_selection.numerics.random import RngStream, StreamPurpose


def element_surface_index(cfg: SystemConfig) -> np.ndarray:
    """Surface index of every reflecting element, in stacking order."""
    return np.repeat(np.arange(cfg.n_surfaces), cfg.surface_sizes)


def realize_channels(geom: Geometry, cfg: SystemConfig, rng: RngStream) -> ChannelRealization:
    """Draw (F, g, d) with i.n.i.d. Nakagami-m fading.

    Omega of every link is its linear path loss: UMi for BS-user and
    RIS-user links, the LOS law for BS-RIS links. Draw order is d, g, F.
    """
    if geom.users.shape != (cfg.n_users, 2) or geom.surfaces.shape != (cfg.n_surfaces, 2):
        raise DimensionError("geometry does not match the configured user/surface counts")

    surface_of = element_surface_index(cfg)

    omega_d = db_to_linear(umi_pathloss_db(geom.user_distances(), cfg.carrier_ghz))
    omega_d = np.broadcast_to(omega_d[:, None], (cfg.n_users, cfg.n_bs))

    ris_user_db = umi_pathloss_db(geom.surface_user_distances(), cfg.carrier_ghz)  # (S, K)
    omega_g = db_to_linear(ris_user_db[surface_of, :]).T                          # (K, M)

    bs_ris_db = los_pathloss_db(geom.surface_distances(), cfg.pathloss_exponent, cfg.ref_loss_db)
    omega_f = np.broadcast_to(db_to_linear(bs_ris_db)[surface_of][:, None],
                              (cfg.total_elements, cfg.n_bs))

    d = nakagami_coefficients(cfg.m_bs_user, omega_d, rng)
    g = nakagami_coefficients(cfg.m_ris_user, omega_g, rng)
    F = nakagami_coefficients(cfg.m_bs_ris, omega_f, rng)

    noise = noise_power_w(cfg.bandwidth_hz, cfg.noise_density_dbm_hz, cfg.noise_figure_db)
    return ChannelRealization(F=F, g=g, d=d, noise_power=noise)


class ChannelGenerator:
    """Per-trial topology and channel draws from disjoint seeded streams."""

    def __init__(self, cfg: SystemConfig):
        self.cfg = cfg

    def draw(self, trial: int) -> Tuple[Geometry, ChannelRealization]:
        """Geometry and realization of Monte-Carlo trial ``trial``."""
        topo_rng = RngStream.for_trial(self.cfg.seed, trial, StreamPurpose.TOPOLOGY)
        chan_rng = RngStream.for_trial(self.cfg.seed, trial, StreamPurpose.CHANNEL)
        geom = draw_topology(self.cfg, topo_rng)
        return geom, realize_channels(geom, self.cfg, chan_rng)
