"""Shared fixtures: seeded unit-scale channel instances and desk configs."""

import numpy as np
import pytest

from ris_selection import config
from ris_selection.models.system import ChannelRealization, SystemConfig


def _cn(gen: np.random.Generator, shape) -> np.ndarray:
    return (gen.standard_normal(shape) + 1j * gen.standard_normal(shape)) / np.sqrt(2.0)


@pytest.fixture
def make_realization():
    """Factory for CN(0, 1) channel instances with unit noise power."""

    def _make(n_bs: int = 4, n_elements: int = 16, n_users: int = 1,
              seed: int = 0, block_direct: bool = False) -> ChannelRealization:
        gen = np.random.default_rng(seed)
        F = _cn(gen, (n_elements, n_bs))
        g = _cn(gen, (n_users, n_elements))
        d = _cn(gen, (n_users, n_bs))
        if block_direct:
            d[:] = 0.0
        return ChannelRealization(F=F, g=g, d=d, noise_power=1.0)

    return _make


@pytest.fixture
def desk_config():
    """The bundled desk scenario with optional overrides."""

    def _load(**overrides) -> SystemConfig:
        return SystemConfig.from_file(config.CONFIG_DIR / "desk.json", overrides)

    return _load
