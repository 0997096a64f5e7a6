"""Complex linear algebra, random streams and empirical statistics."""

from ris_selection.numerics.linalg import (
    CMatrix, CVector, check_hermitian, hermitian_eig, require_length, require_shape,
)
from ris_selection.numerics.random import (
    RngStream, StreamPurpose, complex_gaussian_matrix, complex_gaussian_vector,
)
from ris_selection.numerics.stats import empirical_cdf, ks_distance

__all__ = [
    "CMatrix", "CVector", "check_hermitian", "hermitian_eig",
    "require_length", "require_shape",
    "RngStream", "StreamPurpose", "complex_gaussian_matrix", "complex_gaussian_vector",
    "empirical_cdf", "ks_distance",
]
