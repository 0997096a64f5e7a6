"""Random cell topology: users in a disc, surfaces on a concentric ring."""

import logging

import numpy as np

from ris_selection.channel.pathloss import REFERENCE_DISTANCE_M
from ris_selection.models.system import Geometry, SystemConfig
from ris_selection.numerics.random import RngStream

logger = logging.getLogger(__name__)

MAX_REDRAWS = 10_000


def surface_positions(n_surfaces: int, ring_radius: float) -> np.ndarray:
    """Surfaces at equal angular spacing starting from angle 0."""
    angles = 2.0 * np.pi * np.arange(n_surfaces) / n_surfaces
    return ring_radius * np.column_stack([np.cos(angles), np.sin(angles)])


def draw_topology(cfg: SystemConfig, rng: RngStream) -> Geometry:
    """Drop K users uniformly over the cell disc and place the S surfaces.

    A user closer than the 1 m reference distance to the BS or to any
    surface is re-drawn, since the path-loss laws are undefined there.
    """
    surfaces = surface_positions(cfg.n_surfaces, cfg.ris_ring_radius_m)
    gen = rng.generator
    users = np.empty((cfg.n_users, 2))
    for k in range(cfg.n_users):
        for attempt in range(MAX_REDRAWS):
            r = cfg.cell_radius_m * np.sqrt(gen.uniform())
            phi = gen.uniform(0.0, 2.0 * np.pi)
            pos = np.array([r * np.cos(phi), r * np.sin(phi)])
            near_bs = np.hypot(*pos) < REFERENCE_DISTANCE_M
            near_ris = np.any(np.hypot(*(surfaces - pos).T) < REFERENCE_DISTANCE_M)
            if not (near_bs or near_ris):
                break
            logger.debug("user %d re-drawn (attempt %d)", k, attempt + 1)
        else:
            raise RuntimeError("could not place a user outside the reference distance")
        users[k] = pos
    return Geometry(users=users, surfaces=surfaces)
