"""
Dense complex linear algebra for 2-, 3- and 6-dimensional operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. The bipartite
basis is ordered qubit-major: |00>, |01>, |02>, |10>, |11>, |12>.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
import numpy.typing as npt
import structlog

from qqcorr.core.config import get_settings
from qqcorr.core.errors import ConvergenceError, DimensionError, NonHermitianError

logger = structlog.get_logger()

ComplexMatrix = npt.NDArray[np.complex128]

QUBIT_QUTRIT_DIMS: Tuple[int, int] = (2, 3)


class Subsystem(str, Enum):
    """Tag for one factor of the qubit-qutrit composite."""
    QUBIT = "qubit"
    QUTRIT = "qutrit"

    @property
    def dim(self) -> int:
        return 2 if self is Subsystem.QUBIT else 3


@dataclass(frozen=True, eq=False)
class HermitianEigenResult:
    """Ascending real spectrum with eigenvectors stored as columns."""
    eigenvalues: npt.NDArray[np.float64]
    eigenvectors: ComplexMatrix


def as_matrix(data) -> ComplexMatrix:
    """
    Coerce input to a finite 2-D complex matrix.

    Args:
        data: Anything ``numpy.asarray`` accepts

    Returns:
        ComplexMatrix: a complex128 copy of the input

    Raises:
        DimensionError: If the input is not two-dimensional
        ValueError: If any entry is NaN or infinite
    """
    m = np.array(data, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Matrix product ``a @ b`` with an explicit shape check."""
    if a.shape[1] != b.shape[0]:
        raise DimensionError(
            f"cannot multiply {a.shape[0]}x{a.shape[1]} by {b.shape[0]}x{b.shape[1]}"
        )
    return a @ b


def dagger(a: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose."""
    return np.conj(np.swapaxes(a, -1, -2))


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Kronecker product, ``a``'s index major."""
    return np.kron(a, b)


def max_asymmetry(m: ComplexMatrix) -> float:
    """Largest elementwise magnitude of ``m - m^dagger``."""
    if m.shape[-1] != m.shape[-2]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def _check_bipartite(rho: ComplexMatrix, dims: Tuple[int, int]) -> Tuple[int, int]:
    d_a, d_b = dims
    n = d_a * d_b
    if rho.shape != (n, n):
        raise DimensionError(
            f"expected a {n}x{n} operator for dims {dims}, got shape {rho.shape}"
        )
    return d_a, d_b


def partial_trace(
    rho: ComplexMatrix,
    dims: Tuple[int, int] = QUBIT_QUTRIT_DIMS,
    keep: Subsystem = Subsystem.QUBIT,
) -> ComplexMatrix:
    """
    Reduce a bipartite operator to one factor.

    Args:
        rho: Operator on the composite space
        dims: Factor dimensions (qubit first)
        keep: Factor to keep; the other is traced out

    Returns:
        ComplexMatrix: reduced operator on the kept factor
    """
    d_a, d_b = _check_bipartite(rho, dims)
    blocks = rho.reshape(d_a, d_b, d_a, d_b)
    if keep is Subsystem.QUBIT:
        return np.einsum("ajbj->ab", blocks)
    return np.einsum("iaib->ab", blocks)


def partial_transpose(
    rho: ComplexMatrix,
    dims: Tuple[int, int] = QUBIT_QUTRIT_DIMS,
    over: Subsystem = Subsystem.QUBIT,
) -> ComplexMatrix:
    """
    Transpose the indices of one factor only.

    Over the qubit: ``out[(a,r),(b,s)] = rho[(b,r),(a,s)]``.
    """
    d_a, d_b = _check_bipartite(rho, dims)
    blocks = rho.reshape(d_a, d_b, d_a, d_b)
    if over is Subsystem.QUBIT:
        swapped = blocks.transpose(2, 1, 0, 3)
    else:
        swapped = blocks.transpose(0, 3, 2, 1)
    return swapped.reshape(d_a * d_b, d_a * d_b)


def _jacobi(
    stack: np.ndarray,
    with_vectors: bool,
    tolerance: float,
    max_sweeps: int,
) -> Tuple[np.ndarray, Optional[np.ndarray]]:
    """
    Cyclic complex Jacobi on a stack of Hermitian matrices of shape (B, n, n).

    Every matrix in the batch receives the same (p, q) rotation order, so the
    result for one matrix does not depend on what else is in the batch.
    """
    a = 0.5 * (stack + dagger(stack))
    n = a.shape[-1]
    v = np.broadcast_to(np.eye(n, dtype=np.complex128), a.shape).copy() if with_vectors else None
    if n == 1:
        return a[:, :, 0].real.copy(), v

    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    threshold = tolerance * np.maximum(1.0, np.max(np.abs(a), axis=(1, 2)))
    off_mask = ~np.eye(n, dtype=bool)

    for sweep in range(max_sweeps + 1):
        off = np.max(np.abs(a[:, off_mask]), axis=1)
        if np.all(off < threshold):
            break
        if sweep == max_sweeps:
            logger.warning(
                "Jacobi rotation did not converge",
                sweeps=max_sweeps,
                off_diagonal=float(np.max(off)),
                batch_size=a.shape[0],
            )
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(largest off-diagonal {float(np.max(off)):.3e})"
            )
        for p, q in pairs:
            apq = a[:, p, q]
            r = np.abs(apq)
            nonzero = r > 0.0
            r_safe = np.where(nonzero, r, 1.0)
            # e^{-i arg a_pq} makes the (p, q) element real and positive
            phase = np.where(nonzero, np.conj(apq) / r_safe, 1.0)
            theta = (a[:, q, q].real - a[:, p, p].real) / (2.0 * r_safe)
            sign = np.where(theta >= 0.0, 1.0, -1.0)
            t = np.where(nonzero, sign / (np.abs(theta) + np.hypot(theta, 1.0)), 0.0)
            c = (1.0 / np.sqrt(t * t + 1.0))[:, None]
            s = (t * c[:, 0])[:, None]
            ph = phase[:, None]

            col_p = a[:, :, p].copy()
            col_q = a[:, :, q].copy()
            a[:, :, p] = c * col_p - s * ph * col_q
            a[:, :, q] = s * col_p + c * ph * col_q

            row_p = a[:, p, :].copy()
            row_q = a[:, q, :].copy()
            a[:, p, :] = c * row_p - s * np.conj(ph) * row_q
            a[:, q, :] = s * row_p + c * np.conj(ph) * row_q

            a[:, p, q] = 0.0
            a[:, q, p] = 0.0

            if v is not None:
                vec_p = v[:, :, p].copy()
                vec_q = v[:, :, q].copy()
                v[:, :, p] = c * vec_p - s * ph * vec_q
                v[:, :, q] = s * vec_p + c * ph * vec_q

    return np.einsum("bii->bi", a).real.copy(), v


def hermitian_eigvals(
    stack: np.ndarray,
    tolerance: Optional[float] = None,
    max_sweeps: Optional[int] = None,
) -> npt.NDArray[np.float64]:
    """
    Ascending eigenvalues for a stack of Hermitian matrices ``(..., n, n)``.

    The input is symmetrized but not checked; callers that need the
    Hermiticity guarantee use :func:`hermitian_eigen`.
    """
    settings = get_settings()
    stack = np.asarray(stack, dtype=np.complex128)
    if stack.ndim < 2 or stack.shape[-1] != stack.shape[-2]:
        raise DimensionError(f"expected a stack of square matrices, got shape {stack.shape}")
    lead = stack.shape[:-2]
    n = stack.shape[-1]
    values, _ = _jacobi(
        stack.reshape(-1, n, n),
        with_vectors=False,
        tolerance=tolerance or settings.jacobi_tolerance,
        max_sweeps=max_sweeps or settings.jacobi_max_sweeps,
    )
    return np.sort(values, axis=-1).reshape(*lead, n)


def hermitian_eigen(m: ComplexMatrix) -> HermitianEigenResult:
    """
    Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Args:
        m: Square matrix, Hermitian within the configured tolerance

    Returns:
        HermitianEigenResult: ascending eigenvalues and unitary eigenvector matrix

    Raises:
        DimensionError: If ``m`` is not square
        NonHermitianError: If ``m`` deviates from Hermitian beyond tolerance
        ConvergenceError: If the rotations fail to converge
    """
    settings = get_settings()
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")

    asym = max_asymmetry(m)
    if asym > settings.hermitian_tolerance:
        raise NonHermitianError(asym, settings.hermitian_tolerance)

    values, vectors = _jacobi(
        m[None, :, :],
        with_vectors=True,
        tolerance=settings.jacobi_tolerance,
        max_sweeps=settings.jacobi_max_sweeps,
    )
    order = np.argsort(values[0], kind="stable")
    return HermitianEigenResult(
        eigenvalues=values[0][order],
        eigenvectors=vectors[0][:, order],
    )
