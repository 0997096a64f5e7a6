"""Reproducible random streams for Monte-Carlo trials."""

from dataclasses import dataclass, field
from enum import IntEnum

import numpy as np

from ris_selection.numerics.linalg import CMatrix, CVector

# Stream indices per trial; purposes occupy the low slots of each block.
STREAM_STRIDE = 16


class StreamPurpose(IntEnum):
    """What a per-trial random stream is consumed by."""
    TOPOLOGY = 0
    CHANNEL = 1
    JO = 2
    FDMA = 3


@dataclass(eq=False)
class RngStream:
    """A seeded PCG64 stream identified by (seed, index).

    Identical (seed, index) pairs produce identical draws on every platform;
    distinct indices map to distinct ``SeedSequence`` spawn keys and hence
    to statistically independent streams. A stream is owned by a single
    trial and must not be shared between threads.
    """
    seed: int
    index: int = 0
    generator: np.random.Generator = field(init=False, repr=False)

    def __post_init__(self):
        if self.seed < 0 or self.index < 0:
            raise ValueError("seed and stream index must be non-negative")
        seq = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.index,))
        self.generator = np.random.Generator(np.random.PCG64(seq))

    @classmethod
    def for_trial(cls, seed: int, trial: int, purpose: StreamPurpose) -> "RngStream":
        """Stream for ``purpose`` within Monte-Carlo trial ``trial``."""
        return cls(seed=seed, index=trial * STREAM_STRIDE + int(purpose))


def complex_gaussian_vector(n: int, rng: RngStream) -> CVector:
    """Draw n i.i.d. CN(0, 1) entries (variance 1 per complex entry)."""
    if n < 1:
        raise ValueError(f"vector length must be >= 1, got {n}")
    return complex_gaussian_matrix((n,), rng)


def complex_gaussian_matrix(shape, rng: RngStream) -> CMatrix:
    """Array of i.i.d. CN(0, 1) entries; real and imaginary parts each have variance 1/2."""
    gen = rng.generator
    re = gen.standard_normal(shape)
    im = gen.standard_normal(shape)
    return (re + 1j * im) / np.sqrt(2.0)
