"""Scenario configuration, geometry and channel realization models."""

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Mapping, Optional, Tuple, Union

import numpy as np
from pydantic import (
    BaseModel, ConfigDict, NonNegativeFloat, NonNegativeInt, PositiveFloat,
    PositiveInt, ValidationError, field_validator, model_validator,
)

from ris_selection import config
from ris_selection.errors import ConfigError, DimensionError, ResultsIOError


class SchemeId(str, Enum):
    """Transmission schemes compared by the simulator."""
    US_JO = "us-jo"
    US_AO = "us-ao"
    US_IDEAL = "us-ideal"
    TDMA = "tdma"
    FDMA = "fdma"

    @property
    def label(self) -> str:
        return {
            "us-jo": "US-JO", "us-ao": "US-AO", "us-ideal": "US-Ideal",
            "tdma": "TDMA", "fdma": "FDMA",
        }[self.value]

    @property
    def selects_user(self) -> bool:
        return self.value.startswith("us-")

    @classmethod
    def parse(cls, s: str) -> "SchemeId":
        """Parse a scheme name; accepts 'jo', 'ao', 'ideal' shorthands."""
        key = s.strip().lower().replace("_", "-")
        aliases = {"jo": "us-jo", "ao": "us-ao", "ideal": "us-ideal"}
        key = aliases.get(key, key)
        for scheme in cls:
            if scheme.value == key:
                return scheme
        raise ValueError(f"Unknown scheme: {s}")


class FdmaAnchor(str, Enum):
    """Which user the shared FDMA reflection pattern is optimized for."""
    RANDOM = "random"
    BEST = "best"


ALL_SCHEMES: Tuple[SchemeId, ...] = tuple(SchemeId)


def _split_csv(value):
    if isinstance(value, str):
        return tuple(part.strip() for part in value.split(",") if part.strip())
    return value


class SystemConfig(BaseModel):
    """All scenario parameters of a simulation run.

    Defaults are the full-scale scenario: an 8-antenna BS at the centre of a
    300 m cell, four users, four 200-element surfaces on a 90 m ring.
    """
    model_config = ConfigDict(extra="forbid", frozen=True)

    n_bs: PositiveInt = 8
    n_users: PositiveInt = 4
    n_surfaces: PositiveInt = 4
    elements_per_surface: Union[PositiveInt, Tuple[PositiveInt, ...]] = 200

    tx_power_w: PositiveFloat = 20.0
    bandwidth_hz: PositiveFloat = 10e6
    noise_density_dbm_hz: float = -174.0
    noise_figure_db: float = 9.0
    carrier_ghz: PositiveFloat = 2.0

    cell_radius_m: PositiveFloat = 300.0
    ris_ring_radius_m: PositiveFloat = 90.0

    # Nakagami severity per link class
    m_bs_user: PositiveFloat = 2.5
    m_ris_user: PositiveFloat = 2.5
    m_bs_ris: PositiveFloat = 2.5

    # BS-RIS line-of-sight path loss: ref_loss_db at 1 m, exponent alpha
    ref_loss_db: float = -30.0
    pathloss_exponent: NonNegativeFloat = 2.0

    trials: PositiveInt = 1000
    seed: NonNegativeInt = 0

    ao_iterations: PositiveInt = 3
    ao_tolerance: Optional[PositiveFloat] = None

    sdr_rank: Optional[PositiveInt] = None
    sdr_max_sweeps: PositiveInt = 500
    sdr_tolerance: PositiveFloat = 1e-8
    sdr_samples: PositiveInt = 1000

    schemes: Tuple[SchemeId, ...] = ALL_SCHEMES
    fdma_anchor: FdmaAnchor = FdmaAnchor.RANDOM
    allow_full_scale_jo: bool = False

    @field_validator("elements_per_surface", mode="before")
    @classmethod
    def _parse_elements(cls, value):
        value = _split_csv(value)
        if isinstance(value, (tuple, list)) and len(value) == 1:
            return value[0]
        return value

    @field_validator("schemes", mode="before")
    @classmethod
    def _parse_schemes(cls, value):
        value = _split_csv(value)
        if isinstance(value, (tuple, list)):
            parsed = [SchemeId.parse(v) if isinstance(v, str) else v for v in value]
            if not parsed:
                raise ValueError("at least one scheme must be enabled")
            # de-duplicate, keep order
            return tuple(dict.fromkeys(parsed))
        return value

    @field_validator("ao_tolerance", "sdr_rank", mode="before")
    @classmethod
    def _parse_optional(cls, value):
        if isinstance(value, str) and value.strip().lower() in ("", "none", "null"):
            return None
        return value

    @model_validator(mode="after")
    def _check_consistency(self) -> "SystemConfig":
        if self.n_users > self.n_bs:
            raise ValueError(
                f"n_users (K={self.n_users}) must not exceed n_bs (N_b={self.n_bs})"
            )
        if isinstance(self.elements_per_surface, tuple) and \
                len(self.elements_per_surface) != self.n_surfaces:
            raise ValueError(
                f"elements_per_surface lists {len(self.elements_per_surface)} surfaces, "
                f"n_surfaces is {self.n_surfaces}"
            )
        if self.ris_ring_radius_m < 1.0:
            raise ValueError("ris_ring_radius_m must be at least the 1 m reference distance")
        if self.cell_radius_m <= 1.0:
            raise ValueError("cell_radius_m must exceed the 1 m reference distance")
        if SchemeId.US_JO in self.schemes and not self.allow_full_scale_jo \
                and self.total_elements > config.JO_ELEMENT_LIMIT:
            raise ValueError(
                f"US-JO with M={self.total_elements} elements exceeds the "
                f"{config.JO_ELEMENT_LIMIT}-element limit; enable allow_full_scale_jo"
            )
        return self

    @property
    def surface_sizes(self) -> Tuple[int, ...]:
        if isinstance(self.elements_per_surface, tuple):
            return self.elements_per_surface
        return (self.elements_per_surface,) * self.n_surfaces

    @property
    def total_elements(self) -> int:
        return int(sum(self.surface_sizes))

    @classmethod
    def from_mapping(cls, data: Mapping) -> "SystemConfig":
        """Validate a flat key-value mapping, raising ConfigError on failure."""
        try:
            return cls.model_validate(dict(data))
        except ValidationError as e:
            raise ConfigError(_first_error(e)) from None

    @classmethod
    def from_file(cls, path: Union[str, Path],
                  overrides: Union[Iterable[str], Mapping, None] = None) -> "SystemConfig":
        """Load a JSON scenario file or a run manifest.

        Overrides are merged into the file's keys before validation, so a
        flag such as ``allow_full_scale_jo`` can unlock a scenario that
        would be rejected on its own.
        """
        doc = _read_document(Path(path))
        doc.update(_parse_overrides(overrides))
        return cls.from_mapping(doc)

    def with_overrides(self, overrides: Union[Iterable[str], Mapping, None]) -> "SystemConfig":
        """Return a new config with ``key=value`` overrides applied and re-validated."""
        pairs = _parse_overrides(overrides)
        if not pairs:
            return self
        data = self.model_dump()
        data.update(pairs)
        return type(self).from_mapping(data)

    def to_document(self) -> dict:
        """JSON-ready flat mapping of every field."""
        return self.model_dump(mode="json")


def _read_document(path: Path) -> dict:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ResultsIOError(path, f"cannot read config: {e.strerror or e}") from None
    except UnicodeDecodeError as e:
        raise ConfigError(f"{path}: not UTF-8 text (bad byte at offset {e.start})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path}: not valid JSON ({e.msg} at line {e.lineno})") from None
    if not isinstance(doc, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    # run manifests nest the scenario under "config"
    if isinstance(doc.get("config"), dict):
        doc = doc["config"]
    return dict(doc)


def _parse_overrides(overrides: Union[Iterable[str], Mapping, None]) -> dict:
    if not overrides:
        return {}
    if isinstance(overrides, Mapping):
        pairs = dict(overrides)
    else:
        pairs = {}
        for item in overrides:
            key, sep, value = item.partition("=")
            if not sep or not key.strip():
                raise ConfigError(f"override '{item}' is not of the form key=value")
            pairs[key.strip()] = value.strip()
    unknown = sorted(k for k in pairs if k not in SystemConfig.model_fields)
    if unknown:
        raise ConfigError(f"unknown config key '{unknown[0]}'")
    return pairs


def _first_error(e: ValidationError) -> str:
    err = e.errors()[0]
    loc = ".".join(str(part) for part in err.get("loc", ()))
    msg = err.get("msg", "invalid value")
    return f"invalid config: {loc}: {msg}" if loc else f"invalid config: {msg}"


@dataclass
class Geometry:
    """Planar positions in metres; the BS sits at the origin."""
    users: np.ndarray      # (K, 2)
    surfaces: np.ndarray   # (S, 2)

    def user_distances(self) -> np.ndarray:
        """BS-to-user distances, shape (K,)."""
        return np.hypot(self.users[:, 0], self.users[:, 1])

    def surface_distances(self) -> np.ndarray:
        """BS-to-surface distances, shape (S,)."""
        return np.hypot(self.surfaces[:, 0], self.surfaces[:, 1])

    def surface_user_distances(self) -> np.ndarray:
        """Surface-to-user distances, shape (S, K)."""
        diff = self.surfaces[:, None, :] - self.users[None, :, :]
        return np.hypot(diff[..., 0], diff[..., 1])


@dataclass
class ChannelRealization:
    """One draw of the BS-RIS, RIS-user and BS-user channels.

    Rows of ``F`` are the per-element BS channels f^T, stacked surface by
    surface; row k of ``g`` and ``d`` belongs to user k.
    """
    F: np.ndarray          # (M, N_b)
    g: np.ndarray          # (K, M)
    d: np.ndarray          # (K, N_b)
    noise_power: float     # watts

    def __post_init__(self):
        self.F = np.asarray(self.F, dtype=np.complex128)
        self.g = np.asarray(self.g, dtype=np.complex128)
        self.d = np.asarray(self.d, dtype=np.complex128)
        if self.F.ndim != 2 or self.g.ndim != 2 or self.d.ndim != 2:
            raise DimensionError("F, g and d must be 2-D arrays")
        M, n_bs = self.F.shape
        if self.g.shape[1] != M:
            raise DimensionError(f"g has {self.g.shape[1]} elements per user, F has {M} rows")
        if self.d.shape[1] != n_bs:
            raise DimensionError(f"d has {self.d.shape[1]} antennas per user, F has {n_bs} columns")
        if self.g.shape[0] != self.d.shape[0]:
            raise DimensionError("g and d disagree on the number of users")
        if self.noise_power <= 0:
            raise ValueError("noise power must be positive")

    @property
    def n_users(self) -> int:
        return self.g.shape[0]

    @property
    def n_elements(self) -> int:
        return self.F.shape[0]

    @property
    def n_bs(self) -> int:
        return self.F.shape[1]

    def link(self, k: int) -> Tuple[np.ndarray, np.ndarray]:
        """(g_k, d_k) of user k."""
        return self.g[k], self.d[k]
