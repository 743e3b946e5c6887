"""
Independent cross-checks for the numerical pipeline.

Closed forms exist only for the qubit-only dephasing scenario. They are
evaluated as printed or with the exponent reconciled to the decay the Kraus
operators actually produce, and the difference is reported rather than hidden.
The dense angular grid is the reference for the measurement optimizer.
"""

import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from qqcorr.core.config import get_settings
from qqcorr.core.errors import OracleDomainError
from qqcorr.models.state import DensityMatrix
from qqcorr.schemas.correlations import MeasurementAngles
from qqcorr.schemas.oracle import OracleComparison, Reconciliation
from qqcorr.schemas.scenario import Coupling, CouplingScenario, NoiseKind
from qqcorr.services.channels import decay_factor, evolve
from qqcorr.services.correlations import MeasurementLandscape, mutual_information, negativity
from qqcorr.services.states import check_state_parameter, initial_state, require_valid

logger = structlog.get_logger()

REPORT_P_VALUES: Tuple[float, ...] = (0.0, 0.1, 0.15, 0.23, 1.0 / 3.0, 0.4, 0.5)
REPORT_T_VALUES: Tuple[float, ...] = (0.0, 0.5, 1.0, 2.0, 5.0, 10.0)


def coherence_factor(t_gamma_a: float, reconciliation: Reconciliation) -> float:
    """exp(-t/2) when reconciled with the Kraus decay, exp(-t/4) as printed."""
    scale = 0.5 if reconciliation is Reconciliation.EXPONENT_RECONCILED else 0.25
    return decay_factor(t_gamma_a) ** scale


def dephased_state_closed_form(
    p: float,
    t_gamma_a: float,
    reconciliation: Reconciliation = Reconciliation.EXPONENT_RECONCILED,
) -> DensityMatrix:
    """
    Closed-form state after qubit-only dephasing.

    Populations are untouched; the three coherences, all of which connect
    different qubit levels, share one decay factor.
    """
    c = coherence_factor(t_gamma_a, reconciliation)
    m = initial_state(p).matrix.copy()
    off_diagonal = ~np.eye(6, dtype=bool)
    m[off_diagonal] *= c
    return DensityMatrix(m)


def negativity_closed_form(
    p: float,
    t_gamma_a: float,
    reconciliation: Reconciliation = Reconciliation.EXPONENT_RECONCILED,
) -> float:
    """
    Negativity after qubit-only dephasing,

        N = [(c - 1)(1 - p) + |(2c + 1)p - c| + |cp - (1 - 2p)|] / 2

    where ``c`` is the coherence factor. At t = 0 this is |3p - 1|.
    """
    p = check_state_parameter(p)
    c = coherence_factor(t_gamma_a, reconciliation)
    value = 0.5 * ((c - 1.0) * (1.0 - p) + abs((2.0 * c + 1.0) * p - c) + abs(c * p - (1.0 - 2.0 * p)))
    # the terms cancel exactly once both kinks are passed; drop the rounding residue
    return max(0.0, value)


def mutual_information_closed_form(p: float, t_gamma_a: float) -> float:
    """
    Printed closed form for the mutual information after qubit-only
    dephasing, evaluated literally with natural logarithms and a 1/ln 4 prefactor.

    Diagnostic only. It diverges at t = 0 (artanh(1)) and at p in {0, 1/2}.

    Raises:
        OracleDomainError: If any term is undefined or the total is not finite
    """
    p = check_state_parameter(p)
    x = coherence_factor(t_gamma_a, Reconciliation.AS_PRINTED)
    x2 = coherence_factor(t_gamma_a, Reconciliation.EXPONENT_RECONCILED)
    with np.errstate(all="ignore"):
        terms = (
            2.0 * x * (np.arctanh(x) - p * np.arctanh(p * x)),
            4.0 * np.arctanh(p / (3.0 * p - 2.0)),
            -p * (np.log(4.0) + 4.0 * np.log(1.0 - 2.0 * p) - 2.0 * np.log(p + p * p)),
            np.log(4.0 + 4.0 * (p * p - 1.0) / (x2 - p * p)),
        )
        value = float(np.sum(terms) / np.log(4.0))
    if not math.isfinite(value):
        raise OracleDomainError(
            f"printed mutual-information form is undefined at p={p:g}, t_gamma_A={t_gamma_a:g}"
        )
    return value


def dense_grid_discord(
    rho: DensityMatrix,
    theta_points: Optional[int] = None,
    phi_points: Optional[int] = None,
) -> Tuple[float, MeasurementAngles]:
    """
    Brute-force minimum of the conditional entropy over the full sphere.

    The grid covers theta in [0, pi] (both ends) and phi in [0, 2 pi) and is
    evaluated in chunks of theta rows. No refinement. Ties resolve to the
    smallest theta, then the smallest phi.

    Returns:
        Tuple[float, MeasurementAngles]: grid minimum in bits and its direction
    """
    settings = get_settings()
    require_valid(rho)
    n_theta = theta_points or settings.dense_theta_points
    n_phi = phi_points or settings.dense_phi_points
    theta_axis = np.linspace(0.0, math.pi, n_theta)
    phi_axis = np.arange(n_phi) * (2.0 * math.pi / n_phi)

    landscape = MeasurementLandscape.from_state(rho.matrix)
    best_value = math.inf
    best_index = (0, 0)
    for start in range(0, n_theta, settings.dense_chunk_rows):
        rows = theta_axis[start:start + settings.dense_chunk_rows]
        values = landscape.evaluate(rows[:, None], phi_axis[None, :])
        i, j = np.unravel_index(np.argmin(values), values.shape)
        if values[i, j] < best_value:
            best_value = float(values[i, j])
            best_index = (start + i, j)

    i, j = best_index
    return best_value, MeasurementAngles(theta=float(theta_axis[i]), phi=float(phi_axis[j]))


def _qubit_dephased(p: float, t_gamma_a: float) -> DensityMatrix:
    scenario = CouplingScenario(noise=NoiseKind.DEPHASING, coupling=Coupling.QUBIT, t_gamma_a=t_gamma_a)
    return evolve(initial_state(p), scenario)


def compare_negativity(p: float, t_gamma_a: float, reconciliation: Reconciliation) -> OracleComparison:
    """Closed-form negativity against the Kraus pipeline at one point."""
    analytic = negativity_closed_form(p, t_gamma_a, reconciliation)
    numeric = negativity(_qubit_dephased(p, t_gamma_a))
    return OracleComparison(
        quantity="negativity",
        p=p,
        t_gamma_a=t_gamma_a,
        reconciliation=reconciliation,
        analytic_value=analytic,
        numeric_value=numeric,
        abs_diff=abs(analytic - numeric),
    )


def compare_mutual_information(p: float, t_gamma_a: float) -> OracleComparison:
    """Printed mutual-information form against the Kraus pipeline at one point."""
    numeric = mutual_information(_qubit_dephased(p, t_gamma_a))
    try:
        analytic: Optional[float] = mutual_information_closed_form(p, t_gamma_a)
        note = ""
    except OracleDomainError as exc:
        analytic = None
        note = f"undefined: {exc}"
    return OracleComparison(
        quantity="mutual_information",
        p=p,
        t_gamma_a=t_gamma_a,
        reconciliation=Reconciliation.AS_PRINTED,
        analytic_value=analytic,
        numeric_value=numeric,
        abs_diff=None if analytic is None else abs(analytic - numeric),
        note=note,
    )


def build_discrepancy_report(
    p_values: Iterable[float] = REPORT_P_VALUES,
    t_values: Sequence[float] = REPORT_T_VALUES,
) -> List[OracleComparison]:
    """Negativity under both readings and the printed mutual information over a (p, t) grid."""
    comparisons: List[OracleComparison] = []
    for p in p_values:
        for t in t_values:
            for reconciliation in (Reconciliation.EXPONENT_RECONCILED, Reconciliation.AS_PRINTED):
                comparisons.append(compare_negativity(p, t, reconciliation))
            comparisons.append(compare_mutual_information(p, t))

    undefined = sum(1 for c in comparisons if c.analytic_value is None)
    logger.info("Discrepancy report built", comparisons=len(comparisons), undefined=undefined)
    return comparisons


def _cell(value: Optional[float]) -> str:
    return "undefined" if value is None else f"{value:.10f}"


def format_discrepancy_report(comparisons: Sequence[OracleComparison]) -> str:
    """Fixed-width plain-text table, one line per comparison."""
    header = (
        f"{'quantity':<20} {'reading':<20} {'p':>8} {'t_gamma_A':>9} "
        f"{'analytic':>14} {'numeric':>14} {'abs_diff':>14}"
    )
    lines = [header, "-" * len(header)]
    for c in comparisons:
        lines.append(
            f"{c.quantity:<20} {c.reconciliation.value:<20} {c.p:>8.4f} {c.t_gamma_a:>9.3f} "
            f"{_cell(c.analytic_value):>14} {c.numeric_value:>14.10f} {_cell(c.abs_diff):>14}"
        )
    return "\n".join(lines) + "\n"
