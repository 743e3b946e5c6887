"""Optimizer accuracy against the brute-force dense grid, and per-point cost."""

import statistics
import time
from typing import List, Tuple

import pytest

from qqcorr.models.state import DensityMatrix
from qqcorr.schemas.scenario import Coupling, CouplingScenario, NoiseKind
from qqcorr.services.channels import evolve
from qqcorr.services.correlations import discord, minimize_over_angles
from qqcorr.services.oracles import dense_grid_discord
from qqcorr.services.states import initial_state

# (p, t) pairs applied to every noise kind and coupling: 6 scenarios x 5 = 30 states
SAMPLE_POINTS = [(0.1, 0.5), (0.15, 1.0), (0.23, 2.0), (1.0 / 3.0, 3.5), (0.45, 6.0)]


def sample_states() -> List[Tuple[str, DensityMatrix]]:
    states = []
    for noise in NoiseKind:
        for coupling in Coupling:
            for p, t in SAMPLE_POINTS:
                scenario = CouplingScenario(noise=noise, coupling=coupling, t_gamma_a=t, t_gamma_b=t)
                states.append((f"{scenario.label}:p={p:.3g}:t={t:g}", evolve(initial_state(p), scenario)))
    return states


@pytest.mark.performance
@pytest.mark.slow
class TestOptimizerAgainstDenseGrid:
    """Test the refined optimizer never loses to the 721 x 1440 grid."""

    @pytest.mark.timeout(3600)
    def test_thirty_states(self):
        """Test agreement within 1e-6 over states from every scenario."""
        states = sample_states()
        assert len(states) == 30

        failures = []
        for name, rho in states:
            refined, _ = minimize_over_angles(rho)
            grid, _ = dense_grid_discord(rho)
            # refinement may only improve on the grid
            if refined > grid + 1e-9 or grid - refined > 1e-6:
                failures.append(f"{name}: refined={refined:.12f} grid={grid:.12f}")

        assert not failures, "\n".join(failures)


@pytest.mark.performance
@pytest.mark.slow
class TestPointCost:
    """Test the cost of one full correlation evaluation."""

    @pytest.mark.timeout(600)
    def test_discord_latency(self):
        """Test median discord evaluation stays within a few seconds."""
        rho = evolve(
            initial_state(0.23),
            CouplingScenario(noise=NoiseKind.AMPLITUDE, coupling=Coupling.MULTILOCAL, t_gamma_a=1.0, t_gamma_b=1.0),
        )

        times = []
        for _ in range(5):
            start_time = time.time()
            discord(rho)
            times.append(time.time() - start_time)

        median = statistics.median(times)
        print(f"\ndiscord: median {median * 1000:.1f}ms, max {max(times) * 1000:.1f}ms")
        assert median < 10.0
