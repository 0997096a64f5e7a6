"""Scenario geometry, path loss and Nakagami-m small-scale fading."""

from ris_selection.channel.pathloss import (
    db_to_linear, los_pathloss_db, noise_power_w, umi_pathloss_db,
)
from ris_selection.channel.fading import (
    nakagami_cdf, nakagami_coefficients, nakagami_pdf, sample_nakagami,
)
from ris_selection.channel.topology import draw_topology
from ris_selection.channel.generator import ChannelGenerator, realize_channels

__all__ = [
    "db_to_linear", "los_pathloss_db", "noise_power_w", "umi_pathloss_db",
    "nakagami_cdf", "nakagami_coefficients", "nakagami_pdf", "sample_nakagami",
    "draw_topology", "ChannelGenerator", "realize_channels",
]
