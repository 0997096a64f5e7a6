"""Reflection and transmit beamforming models."""

from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * np.pi
UNIT_NORM_TOL = 1e-12


def wrap_phase(angles) -> np.ndarray:
    """Reduce angles to [0, 2*pi)."""
    wrapped = np.mod(np.asarray(angles, dtype=float), TWO_PI)
    # np.mod can round tiny negatives up to exactly 2*pi
    wrapped[wrapped >= TWO_PI] = 0.0
    return wrapped


@dataclass(frozen=True)
class PhaseConfig:
    """Per-element RIS phase shifts theta, the diagonal of Theta."""
    theta: np.ndarray

    def __post_init__(self):
        theta = np.asarray(self.theta, dtype=float)
        if theta.ndim != 1:
            raise ValueError(f"phase vector must be 1-D, got shape {theta.shape}")
        if np.any(theta < 0.0) or np.any(theta >= TWO_PI) or not np.all(np.isfinite(theta)):
            raise ValueError("phase shifts must lie in [0, 2*pi)")
        object.__setattr__(self, "theta", theta)

    @classmethod
    def from_angles(cls, angles) -> "PhaseConfig":
        """Build from arbitrary real angles, wrapping into [0, 2*pi)."""
        return cls(wrap_phase(np.atleast_1d(angles)))

    @classmethod
    def zeros(cls, n_elements: int) -> "PhaseConfig":
        return cls(np.zeros(n_elements))

    @property
    def phasors(self) -> np.ndarray:
        """Unit-modulus reflection coefficients e^{j theta}."""
        return np.exp(1j * self.theta)

    def __len__(self) -> int:
        return self.theta.shape[0]


@dataclass(frozen=True)
class Beamformer:
    """Unit-norm transmit beamformer w of length N_b."""
    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=np.complex128)
        if w.ndim != 1 or w.shape[0] == 0:
            raise ValueError(f"beamformer must be a non-empty vector, got shape {w.shape}")
        if abs(float(np.vdot(w, w).real) - 1.0) > UNIT_NORM_TOL:
            raise ValueError("beamformer must have unit norm")
        object.__setattr__(self, "w", w)

    def __len__(self) -> int:
        return self.w.shape[0]
