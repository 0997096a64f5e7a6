"""State and outcome models of the phase-shift optimizers."""

from dataclasses import dataclass, field
from enum import Enum
from typing import List

import numpy as np

from ris_selection.models.beam import Beamformer, PhaseConfig


@dataclass(frozen=True)
class CostMatrix:
    """Homogenized QCQP cost C = B B^H with B = [diag(g) F; d^T]."""
    C: np.ndarray

    @property
    def size(self) -> int:
        return self.C.shape[0]


@dataclass
class SdpFactor:
    """Low-rank factor Y of the SDP variable V = Y Y^H; rows have unit norm."""
    Y: np.ndarray

    @property
    def rank(self) -> int:
        return self.Y.shape[1]

    @property
    def V(self) -> np.ndarray:
        return self.Y @ self.Y.conj().T


@dataclass
class SdpSolution:
    """Result of the diagonally-constrained SDP solve."""
    factor: SdpFactor
    objective: float
    sweeps: int
    converged: bool
    trace: List[float] = field(default_factory=list)  # objective after each sweep


@dataclass
class JoOutcome:
    """Joint-optimization result for one user."""
    phases: PhaseConfig
    beamformer: Beamformer
    gain: float
    rate: float            # bit/s/Hz
    sdp_objective: float
    converged: bool


class AoStep(str, Enum):
    INIT = "init"
    PHASE = "phase"
    BEAM = "beam"


@dataclass
class AoState:
    """Snapshot after one AO half-step."""
    iteration: int
    step: AoStep
    beamformer: Beamformer
    phases: PhaseConfig
    objective: float       # |(g^T Theta F + d^T) w|^2


@dataclass
class AoOutcome:
    """Alternating-optimization result for one user."""
    phases: PhaseConfig
    beamformer: Beamformer
    gain: float
    rate: float            # bit/s/Hz
    trace: List[AoState]
    flagged: bool = False  # direct link blocked; fallback initializer used

    @property
    def objectives(self) -> np.ndarray:
        return np.array([s.objective for s in self.trace])
