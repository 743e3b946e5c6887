"""
Kraus families for qubit and qutrit dephasing and amplitude damping.

Every family is parametrized by the dimensionless decay product
``t_gamma = t * Gamma`` of the subsystem it acts on. Operators are rebuilt
for each time point.
"""

import math
from typing import List, Tuple

import numpy as np

from qqcorr.core.cmatrix import ComplexMatrix, Subsystem, dagger, kron
from qqcorr.core.config import get_settings
from qqcorr.core.errors import DimensionError, ParameterRangeError
from qqcorr.models.channel import KrausChannel
from qqcorr.models.state import DensityMatrix
from qqcorr.schemas.scenario import CouplingScenario, NoiseKind, QutritDephasingConvention
from qqcorr.services.states import require_valid


def decay_factor(t_gamma: float) -> float:
    """exp(-t_gamma), exactly 0 beyond the configured clamp."""
    t_gamma = float(t_gamma)
    if math.isnan(t_gamma) or t_gamma < 0.0:
        raise ParameterRangeError(f"t_gamma must be non-negative, got {t_gamma!r}")
    if t_gamma > get_settings().exponent_clamp:
        return 0.0
    return math.exp(-t_gamma)


def _diag(*values: float) -> ComplexMatrix:
    return np.diag(np.asarray(values, dtype=np.complex128))


def dephasing_strength(t_gamma: float) -> float:
    """
    Coupling strength ``1 - exp(-t_gamma)``, in [0, 1].

    Raises:
        ParameterRangeError: If t_gamma is negative or NaN
    """
    return 1.0 - decay_factor(t_gamma)


def qubit_dephasing(t_gamma: float) -> KrausChannel:
    """diag(1, sqrt(1-g)) and diag(0, sqrt(g)) with g = 1 - exp(-t_gamma)."""
    gamma = dephasing_strength(t_gamma)
    return KrausChannel(
        operators=(
            _diag(1.0, math.sqrt(1.0 - gamma)),
            _diag(0.0, math.sqrt(gamma)),
        ),
        dim=2,
        label="dephasing:qubit",
    )


def qutrit_dephasing(
    t_gamma: float,
    convention: QutritDephasingConvention = QutritDephasingConvention.RECONCILED,
) -> KrausChannel:
    """
    Qutrit phase damping with coherence factor ``g``.

    Operators are diag(1, g, g), diag(0, sqrt(1-g^2), 0) and
    diag(0, 0, sqrt(1-g^2)). Coherences between level 0 and an excited level
    scale by ``g``, the one between the two excited levels by ``g^2``.

    Args:
        t_gamma: Decay product t * Gamma_B, non-negative
        convention: RECONCILED gives g = exp(-t_gamma), LITERAL gives
            g = 1 - exp(-t_gamma)

    Returns:
        KrausChannel: three-operator channel of dim 3
    """
    decay = decay_factor(t_gamma)
    g = decay if convention is QutritDephasingConvention.RECONCILED else 1.0 - decay
    off = math.sqrt(max(0.0, 1.0 - g * g))
    return KrausChannel(
        operators=(
            _diag(1.0, g, g),
            _diag(0.0, off, 0.0),
            _diag(0.0, 0.0, off),
        ),
        dim=3,
        label=f"dephasing:qutrit:{convention.value}",
    )


def qubit_amplitude(t_gamma: float) -> KrausChannel:
    """Qubit amplitude damping with decay probability ``1 - exp(-t_gamma)``."""
    beta = dephasing_strength(t_gamma)
    lower = np.zeros((2, 2), dtype=np.complex128)
    lower[0, 1] = math.sqrt(beta)
    return KrausChannel(
        operators=(_diag(1.0, math.sqrt(1.0 - beta)), lower),
        dim=2,
        label="amplitude:qubit",
    )


def qutrit_amplitude(t_gamma: float) -> KrausChannel:
    """
    Qutrit amplitude damping where both excited levels decay into level 0
    with the same probability ``1 - exp(-t_gamma)``.
    """
    beta = dephasing_strength(t_gamma)
    keep = math.sqrt(1.0 - beta)
    ops: List[ComplexMatrix] = [_diag(1.0, keep, keep)]
    for level in (1, 2):
        jump = np.zeros((3, 3), dtype=np.complex128)
        jump[0, level] = math.sqrt(beta)
        ops.append(jump)
    return KrausChannel(operators=tuple(ops), dim=3, label="amplitude:qutrit")


def lift(channel: KrausChannel, subsystem: Subsystem) -> KrausChannel:
    """
    Embed a one-subsystem channel into the 6-dimensional composite.

    Qubit operators become ``E (x) I_3``; qutrit operators become ``I_2 (x) E``.

    Raises:
        DimensionError: If the channel dimension does not match the subsystem
    """
    if channel.dim != subsystem.dim:
        raise DimensionError(
            f"channel '{channel.label}' has dim {channel.dim} but {subsystem.value} has dim {subsystem.dim}"
        )
    if subsystem is Subsystem.QUBIT:
        ops = tuple(kron(op, np.eye(3, dtype=np.complex128)) for op in channel.operators)
    else:
        ops = tuple(kron(np.eye(2, dtype=np.complex128), op) for op in channel.operators)
    return KrausChannel(operators=ops, dim=6, label=f"{channel.label}@6")


def local_channels(scenario: CouplingScenario) -> Tuple[KrausChannel, KrausChannel]:
    """(qubit channel, qutrit channel) for a scenario; an uncoupled side gets the identity."""
    if scenario.noise is NoiseKind.DEPHASING:
        qubit = qubit_dephasing(scenario.t_gamma_a)
        qutrit = qutrit_dephasing(scenario.t_gamma_b, scenario.qutrit_dephasing)
    else:
        qubit = qubit_amplitude(scenario.t_gamma_a)
        qutrit = qutrit_amplitude(scenario.t_gamma_b)

    if not scenario.acts_on_qubit:
        qubit = KrausChannel.identity(Subsystem.QUBIT)
    if not scenario.acts_on_qutrit:
        qutrit = KrausChannel.identity(Subsystem.QUTRIT)
    return qubit, qutrit


def evolve(rho0: DensityMatrix, scenario: CouplingScenario) -> DensityMatrix:
    """
    Apply ``rho -> sum_j sum_k (E_Bj E_Ak) rho (E_Ak^dagger E_Bj^dagger)``.

    Args:
        rho0: Valid initial state
        scenario: Noise kind, coupling and both decay products

    Returns:
        DensityMatrix: the evolved state, validated

    Raises:
        InvalidStateError: If the input (or, on a channel bug, the output) fails validation
    """
    require_valid(rho0, context="input state")
    qubit, qutrit = local_channels(scenario)
    lifted_a = lift(qubit, Subsystem.QUBIT).operators
    lifted_b = lift(qutrit, Subsystem.QUTRIT).operators

    # (J*K, 6, 6) stack of joint operators E_Bj E_Ak
    joint = np.stack([e_b @ e_a for e_b in lifted_b for e_a in lifted_a])
    rho = np.einsum("kij,jl,klm->im", joint, rho0.matrix, dagger(joint))

    evolved = DensityMatrix(rho)
    return require_valid(evolved, context=f"state evolved under {scenario.label}")
