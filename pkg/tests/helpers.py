"""Reference states and entropy helpers shared by the test suites."""

import math

import numpy as np

from qqcorr.models.state import DensityMatrix

REFERENCE_P_VALUES = (0.0, 0.15, 0.23, 1.0 / 3.0, 0.5)


def binary_entropy(x: float) -> float:
    """H2(x) in bits."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


def shannon(*probs: float) -> float:
    """Shannon entropy in bits of a probability vector."""
    return -sum(q * math.log2(q) for q in probs if q > 0.0)


def product_state() -> DensityMatrix:
    """A mixed, non-diagonal product state rho_A (x) rho_B."""
    rho_a = np.array([[0.7, 0.2 + 0.1j], [0.2 - 0.1j, 0.3]], dtype=np.complex128)
    rho_b = np.array(
        [[0.5, 0.1, 0.0], [0.1, 0.3, 0.0], [0.0, 0.0, 0.2]],
        dtype=np.complex128,
    )
    return DensityMatrix(np.kron(rho_a, rho_b))


def classical_quantum_state() -> DensityMatrix:
    """sum_k q_k |k><k| (x) sigma_k with non-commuting qutrit states."""
    sigma_0 = np.diag([0.6, 0.4, 0.0]).astype(np.complex128)
    sigma_1 = np.array(
        [[0.25, 0.25, 0.0], [0.25, 0.25, 0.0], [0.0, 0.0, 0.5]],
        dtype=np.complex128,
    )
    proj_0 = np.diag([1.0, 0.0]).astype(np.complex128)
    proj_1 = np.diag([0.0, 1.0]).astype(np.complex128)
    return DensityMatrix(0.3 * np.kron(proj_0, sigma_0) + 0.7 * np.kron(proj_1, sigma_1))
