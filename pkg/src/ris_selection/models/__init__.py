"""Data models for the multi-RIS simulator."""

from ris_selection.models.system import (
    ALL_SCHEMES, ChannelRealization, FdmaAnchor, Geometry, SchemeId, SystemConfig,
)
from ris_selection.models.beam import Beamformer, PhaseConfig, wrap_phase
from ris_selection.models.optimization import (
    AoOutcome, AoState, AoStep, CostMatrix, JoOutcome, SdpFactor, SdpSolution,
)
from ris_selection.models.results import ResultSet, SchemeResult, TrialResult

__all__ = [
    "ALL_SCHEMES", "ChannelRealization", "FdmaAnchor", "Geometry", "SchemeId", "SystemConfig",
    "Beamformer", "PhaseConfig", "wrap_phase",
    "AoOutcome", "AoState", "AoStep", "CostMatrix", "JoOutcome", "SdpFactor", "SdpSolution",
    "ResultSet", "SchemeResult", "TrialResult",
]
