"""Dense complex linear algebra used by the channel and optimizer modules.

Vectors and matrices are plain ``numpy`` complex128 arrays; the helpers
here enforce shapes at module boundaries so that numpy broadcasting
never silently combines non-conformable operands.
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt

from ris_selection.errors import DimensionError, NumericalError

logger = logging.getLogger(__name__)

CVector = npt.NDArray[np.complex128]
CMatrix = npt.NDArray[np.complex128]

HERMITIAN_ATOL = 1e-12
JACOBI_TOL = 1e-11
JACOBI_MAX_SWEEPS = 100


def require_length(vec, length: Optional[int], name: str) -> CVector:
    """Return ``vec`` as a 1-D complex array, checking its length."""
    arr = np.asarray(vec, dtype=np.complex128)
    if arr.ndim != 1:
        raise DimensionError(f"{name} must be a vector, got shape {arr.shape}")
    if length is not None and arr.shape[0] != length:
        raise DimensionError(f"{name} has length {arr.shape[0]}, expected {length}")
    return arr


def require_shape(mat, shape: Sequence[Optional[int]], name: str) -> CMatrix:
    """Return ``mat`` as a 2-D complex array; ``None`` entries match any size."""
    arr = np.asarray(mat, dtype=np.complex128)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be a matrix, got shape {arr.shape}")
    for axis, expected in enumerate(shape):
        if expected is not None and arr.shape[axis] != expected:
            raise DimensionError(
                f"{name} has shape {arr.shape}, expected {tuple(shape)}"
            )
    return arr


def check_hermitian(H, atol: float = HERMITIAN_ATOL) -> CMatrix:
    """Validate that ``H`` is square and Hermitian.

    The tolerance is absolute for matrices with entries of order one and
    scales with the largest entry otherwise.
    """
    arr = np.asarray(H, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise DimensionError(f"Hermitian input must be a non-empty square matrix, got {arr.shape}")
    scale = max(1.0, float(np.max(np.abs(arr))))
    asym = float(np.max(np.abs(arr - arr.conj().T)))
    if asym > atol * scale:
        raise NumericalError(f"matrix is not Hermitian (max |H - H^H| = {asym:.3e})")
    return arr


def _off_norm(A: CMatrix) -> float:
    # direct form; the squared-norm difference cancels near convergence
    return float(np.linalg.norm(A - np.diag(np.diag(A))))


def hermitian_eig(H, tol: float = JACOBI_TOL,
                  max_sweeps: int = JACOBI_MAX_SWEEPS) -> Tuple[np.ndarray, CMatrix]:
    """Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi rotations.

    Each rotation first removes the phase of ``H[p, q]`` with a diagonal
    unitary and then applies a real Jacobi rotation, so the pair stays
    Hermitian throughout.

    Args:
        H: Hermitian matrix of size n >= 1.
        tol: Stop once the off-diagonal Frobenius norm drops below
            ``tol * ||H||_F``.
        max_sweeps: Hard cap on full cyclic sweeps.

    Returns:
        Tuple of (eigenvalues sorted descending, unitary matrix whose
        columns are the matching eigenvectors).
    """
    A = check_hermitian(H).copy()
    n = A.shape[0]
    U = np.eye(n, dtype=np.complex128)
    scale = float(np.linalg.norm(A))

    sweeps = 0
    if n > 1 and scale > 0.0:
        while _off_norm(A) >= tol * scale:
            if sweeps >= max_sweeps:
                logger.warning("Jacobi sweep limit %d reached (off-norm %.3e)",
                               max_sweeps, _off_norm(A))
                break
            sweeps += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    _rotate(A, U, p, q, scale)

    eigenvalues = np.real(np.diag(A)).copy()
    order = np.argsort(-eigenvalues, kind="stable")
    logger.debug("Jacobi converged after %d sweeps (n=%d)", sweeps, n)
    return eigenvalues[order], U[:, order]


def _rotate(A: CMatrix, U: CMatrix, p: int, q: int, scale: float) -> None:
    """Annihilate A[p, q] in place and accumulate the rotation into U."""
    h = A[p, q]
    mag = abs(h)
    if mag <= 1e-300 or mag < 1e-18 * scale:
        return
    phase = np.conj(h / mag)
    a = A[p, p].real
    b = A[q, q].real
    theta = (b - a) / (2.0 * mag)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + np.sqrt(theta * theta + 1.0))
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c

    G = np.array([[c, s], [-s * phase, c * phase]], dtype=np.complex128)
    idx = [p, q]
    A[:, idx] = A[:, idx] @ G
    A[idx, :] = G.conj().T @ A[idx, :]
    U[:, idx] = U[:, idx] @ G

    A[p, q] = 0.0
    A[q, p] = 0.0
    A[p, p] = A[p, p].real
    A[q, q] = A[q, q].real
