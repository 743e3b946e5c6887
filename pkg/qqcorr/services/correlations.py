"""
Entanglement and correlation measures for qubit-qutrit states.

All entropies are in bits. Projective measurements always act on the qubit.
"""

import math
import time
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import numpy.typing as npt
import structlog
from scipy import optimize

from qqcorr.core.cmatrix import (
    ComplexMatrix,
    Subsystem,
    hermitian_eigvals,
    max_asymmetry,
    partial_trace,
    partial_transpose,
)
from qqcorr.core.config import get_settings
from qqcorr.core.errors import (
    DimensionError,
    InvalidStateError,
    NonHermitianError,
    OptimizerFailureError,
)
from qqcorr.models.state import DensityMatrix
from qqcorr.schemas.correlations import CorrelationReport, MeasurementAngles
from qqcorr.services.states import require_valid

logger = structlog.get_logger()

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = np.stack([PAULI_X, PAULI_Y, PAULI_Z])


def _entropy_of_spectrum(values: np.ndarray) -> np.ndarray:
    """-sum(v log2 v) over the last axis, with 0 log 0 = 0 and rounding negatives dropped."""
    positive = np.where(values > 0.0, values, 1.0)
    return -np.sum(np.where(values > 0.0, values * np.log2(positive), 0.0), axis=-1)


def _entropy_bits(m: ComplexMatrix) -> float:
    return float(_entropy_of_spectrum(hermitian_eigvals(m)))


def von_neumann_entropy(rho) -> float:
    """
    Von Neumann entropy ``-sum lambda log2 lambda`` of a density-like matrix.

    Args:
        rho: DensityMatrix or any square array that is Hermitian, PSD and of unit trace

    Returns:
        float: entropy in bits, within [0, log2 d]

    Raises:
        NonHermitianError: If the input is not Hermitian within tolerance
        InvalidStateError: If the trace is not 1 or the spectrum is negative beyond tolerance
    """
    settings = get_settings()
    m = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")

    asym = max_asymmetry(m)
    if asym > settings.hermitian_tolerance:
        raise NonHermitianError(asym, settings.hermitian_tolerance)
    trace_defect = abs(complex(np.trace(m)) - 1.0)
    if trace_defect > settings.trace_tolerance:
        raise InvalidStateError(f"entropy needs unit trace, trace defect is {trace_defect:.3e}")

    values = hermitian_eigvals(m)
    if values[0] < -settings.psd_tolerance:
        raise InvalidStateError(f"entropy needs a PSD matrix, minimum eigenvalue is {values[0]:.3e}")
    return float(_entropy_of_spectrum(values))


def _clamp_small_negative(value: float, quantity: str) -> float:
    window = get_settings().discord_clamp_window
    if value >= 0.0:
        return value
    if value > -window:
        return 0.0
    raise InvalidStateError(f"{quantity} is negative beyond rounding: {value:.3e}")


def negativity(rho: DensityMatrix) -> float:
    """
    Sum of ``|lambda| - lambda`` over the spectrum of the partial transpose
    taken over the qubit, i.e. twice the magnitude of its negative part.

    Raises:
        InvalidStateError: If rho fails validation
    """
    require_valid(rho)
    values = hermitian_eigvals(partial_transpose(rho.matrix, over=Subsystem.QUBIT))
    return float(np.sum(np.abs(values) - values))


def _mutual_information(m: ComplexMatrix) -> float:
    s_a = _entropy_bits(partial_trace(m, keep=Subsystem.QUBIT))
    s_b = _entropy_bits(partial_trace(m, keep=Subsystem.QUTRIT))
    s_ab = _entropy_bits(m)
    return _clamp_small_negative(s_a + s_b - s_ab, "mutual information")


def mutual_information(rho: DensityMatrix) -> float:
    """S(rho_A) + S(rho_B) - S(rho_AB) in bits."""
    require_valid(rho)
    return _mutual_information(rho.matrix)


def measurement_projectors(angles: MeasurementAngles) -> Tuple[ComplexMatrix, ComplexMatrix]:
    """
    Qubit projectors ``(I + n.sigma)/2`` and ``(I - n.sigma)/2`` along the
    Bloch direction ``n = (sin t cos f, sin t sin f, cos t)``.
    """
    n = np.array(
        [
            math.sin(angles.theta) * math.cos(angles.phi),
            math.sin(angles.theta) * math.sin(angles.phi),
            math.cos(angles.theta),
        ]
    )
    n_sigma = np.einsum("j,jab->ab", n, PAULIS)
    eye = np.eye(2, dtype=np.complex128)
    return 0.5 * (eye + n_sigma), 0.5 * (eye - n_sigma)


@dataclass(frozen=True, eq=False)
class MeasurementLandscape:
    """
    Conditional entropy of the qutrit after a qubit measurement, as a
    function of the measurement direction.

    For a projector ``(I +/- n.sigma)/2`` the unnormalized conditional
    state is ``(rho_B +/- sum_j n_j M_j)/2`` with ``M_j = Tr_A[(sigma_j (x) I) rho]``,
    so one state needs only four 3x3 matrices for any number of directions.
    """

    rho_b: ComplexMatrix
    moments: ComplexMatrix  # (3, 3, 3): M_x, M_y, M_z

    @classmethod
    def from_state(cls, rho: ComplexMatrix) -> "MeasurementLandscape":
        blocks = rho.reshape(2, 3, 2, 3)
        moments = np.einsum("sac,ciaj->sij", PAULIS, blocks)
        return cls(rho_b=partial_trace(rho, keep=Subsystem.QUTRIT), moments=moments)

    def evaluate(self, theta: npt.ArrayLike, phi: npt.ArrayLike) -> npt.NDArray[np.float64]:
        """Conditional entropy in bits for broadcastable arrays of angles."""
        theta, phi = np.broadcast_arrays(np.asarray(theta, dtype=float), np.asarray(phi, dtype=float))
        shape = theta.shape
        theta = theta.ravel()
        phi = phi.ravel()
        n = np.stack(
            [np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)],
            axis=-1,
        )
        n_m = np.einsum("bs,sij->bij", n, self.moments)
        # (B, 2, 3, 3): both outcomes for every direction
        outcomes = 0.5 * np.stack([self.rho_b + n_m, self.rho_b - n_m], axis=1)
        probs = np.einsum("bkii->bk", outcomes).real
        values = hermitian_eigvals(outcomes)

        floor = get_settings().probability_floor
        live = probs >= floor
        safe_probs = np.where(live, probs, 1.0)[..., None]
        ratio = np.where(values > 0.0, values / safe_probs, 1.0)
        terms = np.where(values > 0.0, -values * np.log2(ratio), 0.0)
        per_outcome = np.where(live, np.sum(terms, axis=-1), 0.0)
        return np.sum(per_outcome, axis=-1).reshape(shape)

    def at(self, angles: MeasurementAngles) -> float:
        return float(self.evaluate(angles.theta, angles.phi))


def conditional_entropy(rho: DensityMatrix, angles: MeasurementAngles) -> float:
    """
    ``sum_k p_k S(rho_k^B)`` after measuring the qubit along ``angles``.

    Outcomes with probability below the configured floor contribute nothing.
    """
    require_valid(rho)
    return MeasurementLandscape.from_state(rho.matrix).at(angles)


def coarse_grid() -> Tuple[np.ndarray, np.ndarray]:
    """(theta, phi) axes of the search grid over the upper hemisphere."""
    settings = get_settings()
    theta = np.linspace(0.0, 0.5 * math.pi, settings.coarse_theta_points)
    phi = np.arange(settings.coarse_phi_points) * (2.0 * math.pi / settings.coarse_phi_points)
    return theta, phi


def _minimize(landscape: MeasurementLandscape) -> Tuple[float, MeasurementAngles]:
    settings = get_settings()
    theta_axis, phi_axis = coarse_grid()
    grid = landscape.evaluate(theta_axis[:, None], phi_axis[None, :])

    # stable sort on the row-major ravel breaks ties by smallest theta, then phi
    order = np.argsort(grid.ravel(), kind="stable")[: settings.refine_starts]
    best_value = float(grid.ravel()[order[0]])
    i, j = np.unravel_index(order[0], grid.shape)
    best_x = np.array([theta_axis[i], phi_axis[j]])

    def objective(x: np.ndarray) -> float:
        return float(landscape.evaluate(x[0], x[1]))

    evaluations = grid.size
    for flat in order:
        i, j = np.unravel_index(flat, grid.shape)
        result = optimize.minimize(
            objective,
            x0=np.array([theta_axis[i], phi_axis[j]]),
            method="Nelder-Mead",
            options=dict(
                xatol=settings.refine_xatol,
                fatol=settings.refine_fatol,
                maxiter=settings.refine_max_iter,
            ),
        )
        evaluations += result.nfev
        if result.fun < best_value:
            best_value = float(result.fun)
            best_x = result.x

    angles = MeasurementAngles.from_any(float(best_x[0]), float(best_x[1])).folded()
    logger.debug(
        "Measurement optimization finished",
        coarse_min=float(grid.ravel()[order[0]]),
        refined_min=best_value,
        theta=angles.theta,
        phi=angles.phi,
        evaluations=evaluations,
    )
    return best_value, angles


def minimize_over_angles(rho: DensityMatrix) -> Tuple[float, MeasurementAngles]:
    """
    Global minimum of the conditional entropy over measurement directions.

    A coarse grid over theta in [0, pi/2] and phi in [0, 2 pi) seeds
    Nelder-Mead refinement from the best few cells. The lower hemisphere is
    covered by the projector-swap symmetry.

    Returns:
        Tuple[float, MeasurementAngles]: minimum in bits and the direction, folded to theta <= pi/2
    """
    require_valid(rho)
    return _minimize(MeasurementLandscape.from_state(rho.matrix))


def _classical_correlation(m: ComplexMatrix) -> Tuple[float, float, MeasurementAngles]:
    landscape = MeasurementLandscape.from_state(m)
    s_b = _entropy_bits(landscape.rho_b)
    min_h, angles = _minimize(landscape)
    return s_b, min_h, angles


def classical_correlation(rho: DensityMatrix) -> Tuple[float, MeasurementAngles]:
    """S(rho_B) minus the minimal conditional entropy, with the optimal direction."""
    require_valid(rho)
    s_b, min_h, angles = _classical_correlation(rho.matrix)
    return _clamp_small_negative(s_b - min_h, "classical correlation"), angles


def discord(rho: DensityMatrix) -> CorrelationReport:
    """
    Negativity, mutual information, classical correlation and discord of one state.

    Raises:
        InvalidStateError: If rho fails validation
        OptimizerFailureError: If classical correlation exceeds mutual
            information by more than the clamp window
    """
    require_valid(rho)
    started = time.perf_counter()
    settings = get_settings()

    neg = negativity(rho)
    mi = _mutual_information(rho.matrix)
    s_b, min_h, angles = _classical_correlation(rho.matrix)
    cc = _clamp_small_negative(s_b - min_h, "classical correlation")

    gap = mi - cc
    if gap < 0.0:
        if gap <= -settings.discord_clamp_window:
            logger.error(
                "Discord below clamp window",
                mutual_information=mi,
                classical_correlation=cc,
                theta=angles.theta,
                phi=angles.phi,
            )
            raise OptimizerFailureError(
                f"classical correlation {cc:.12g} exceeds mutual information {mi:.12g} "
                f"by {-gap:.3e} bits"
            )
        cc = mi

    report = CorrelationReport(
        negativity=neg,
        mutual_information=mi,
        classical_correlation=cc,
        discord=mi - cc,
        argmin=angles,
    )
    logger.debug(
        "Correlations computed",
        discord=report.discord,
        negativity=neg,
        duration_ms=round((time.perf_counter() - started) * 1000, 2),
    )
    return report
