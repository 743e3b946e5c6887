"""Initial one-parameter qubit-qutrit family and density-matrix hygiene."""

import numpy as np
import structlog

from qqcorr.core.cmatrix import ComplexMatrix, hermitian_eigvals, max_asymmetry
from qqcorr.core.config import get_settings
from qqcorr.core.errors import DimensionError, InvalidStateError, ParameterRangeError
from qqcorr.models.state import DensityMatrix
from qqcorr.schemas.state import ValidityReport

logger = structlog.get_logger()

# Basis indices in the qubit-major ordering.
KET_00, KET_01, KET_02, KET_10, KET_11, KET_12 = range(6)


def check_state_parameter(p: float) -> float:
    """
    Validate the family parameter.

    Raises:
        ParameterRangeError: If p is not a finite number in [0, 0.5]
    """
    p = float(p)
    if not np.isfinite(p) or p < 0.0 or p > 0.5:
        raise ParameterRangeError(f"state parameter p={p!r} outside [0, 0.5]")
    return p


def initial_state(p: float) -> DensityMatrix:
    """
    Build the one-parameter family

        p/2 [ (|00> + |12>)(<00| + <12|) + (|01> + |11>)(<01| + <11|) ]
        + (1-2p)/2 (|02> + |10>)(<02| + <10|)

    which is separable only at p = 1/3.

    Args:
        p: State parameter in [0, 0.5]

    Returns:
        DensityMatrix: the initial state rho(0)
    """
    p = check_state_parameter(p)
    half_p = p / 2.0
    rest = (1.0 - 2.0 * p) / 2.0

    rho = np.zeros((6, 6), dtype=np.complex128)
    for i, j, w in (
        (KET_00, KET_12, half_p),
        (KET_01, KET_11, half_p),
        (KET_02, KET_10, rest),
    ):
        rho[i, i] = rho[j, j] = w
        rho[i, j] = rho[j, i] = w
    return DensityMatrix(rho)


def validate(rho) -> ValidityReport:
    """
    Report Hermiticity defect, trace defect and minimum eigenvalue.

    Args:
        rho: DensityMatrix or any 6x6 array

    Returns:
        ValidityReport: passes iff every defect is within the configured tolerances
    """
    settings = get_settings()
    m: ComplexMatrix = rho.matrix if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=np.complex128)
    if m.shape != (6, 6):
        raise DimensionError(f"expected a 6x6 matrix, got shape {m.shape}")

    asym = max_asymmetry(m)
    trace_defect = abs(complex(np.trace(m)) - 1.0)
    # the symmetrized spectrum is still informative when Hermiticity fails
    min_eig = float(hermitian_eigvals(m)[0])

    return ValidityReport(
        hermiticity_defect=asym,
        trace_defect=trace_defect,
        min_eigenvalue=min_eig,
        hermitian_ok=asym <= settings.hermitian_tolerance,
        trace_ok=trace_defect <= settings.trace_tolerance,
        psd_ok=min_eig >= -settings.psd_tolerance,
    )


def require_valid(rho: DensityMatrix, context: str = "state") -> DensityMatrix:
    """
    Raise unless ``rho`` passes :func:`validate`.

    Raises:
        InvalidStateError: With the failing report attached
    """
    report = validate(rho)
    if not report.passed:
        logger.warning("Density matrix failed validation", context=context, problems=report.describe())
        raise InvalidStateError(f"invalid {context}: {report.describe()}", report=report)
    return rho
