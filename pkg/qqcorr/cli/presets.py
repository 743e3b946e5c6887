"""Figure presets: the sweep setups behind each published panel."""

from typing import Dict, List

from qqcorr.core.errors import QQCorrError
from qqcorr.schemas.scenario import Coupling, NoiseKind
from qqcorr.schemas.sweep import Axis, Measure, SweepSegment

FIGURE_AXIS_MAX = 10.0
FIGURE_STEPS = 200


class UnknownFigureError(QQCorrError, ValueError):
    """No preset with the requested name."""


def _one_sided_amplitude() -> List[SweepSegment]:
    return [
        SweepSegment(label="qubit", coupling=Coupling.QUBIT, axis=Axis.A),
        SweepSegment(label="qutrit", coupling=Coupling.QUTRIT, axis=Axis.B),
    ]


def _multilocal_amplitude() -> List[SweepSegment]:
    # negativity and discord against t_gamma_B are pinned at different t_gamma_A
    return [
        SweepSegment(label="multilocal-A", coupling=Coupling.MULTILOCAL, axis=Axis.A, fixed_t_gamma=2.0),
        SweepSegment(
            label="multilocal-B-negativity",
            coupling=Coupling.MULTILOCAL,
            axis=Axis.B,
            fixed_t_gamma=2.0,
            measures=(Measure.NEGATIVITY,),
        ),
        SweepSegment(
            label="multilocal-B-discord",
            coupling=Coupling.MULTILOCAL,
            axis=Axis.B,
            fixed_t_gamma=0.2,
            measures=(Measure.DISCORD,),
        ),
    ]


FIGURES: Dict[str, dict] = {
    "fig1a": dict(
        noise=NoiseKind.DEPHASING,
        p_values=[0.15, 0.23],
        segments=lambda: [SweepSegment(label="qubit", coupling=Coupling.QUBIT, axis=Axis.A)],
    ),
    "fig1b": dict(
        noise=NoiseKind.DEPHASING,
        p_values=[0.15, 0.23],
        segments=lambda: [
            SweepSegment(label="multilocal", coupling=Coupling.MULTILOCAL, axis=Axis.A, fixed_t_gamma=2.0)
        ],
    ),
    "fig2": dict(
        noise=NoiseKind.DEPHASING,
        p_values=[0.15, 0.23],
        segments=lambda: [
            SweepSegment(label="multilocal", coupling=Coupling.MULTILOCAL, axis=Axis.B, fixed_t_gamma=2.0)
        ],
    ),
    "fig3a": dict(noise=NoiseKind.AMPLITUDE, p_values=[0.15], segments=_one_sided_amplitude),
    "fig3b": dict(noise=NoiseKind.AMPLITUDE, p_values=[0.23], segments=_one_sided_amplitude),
    "fig4a": dict(noise=NoiseKind.AMPLITUDE, p_values=[0.15], segments=_multilocal_amplitude),
    "fig4b": dict(noise=NoiseKind.AMPLITUDE, p_values=[0.23], segments=_multilocal_amplitude),
}


def figure_names() -> List[str]:
    return list(FIGURES)


def figure_preset(name: str) -> dict:
    """
    Keyword arguments for :class:`SweepConfig` reproducing one figure.

    Raises:
        UnknownFigureError: If ``name`` is not a known figure
    """
    try:
        preset = FIGURES[name]
    except KeyError:
        raise UnknownFigureError(f"unknown figure '{name}', expected one of {', '.join(FIGURES)}") from None
    return dict(
        noise=preset["noise"],
        p_values=list(preset["p_values"]),
        segments=preset["segments"](),
        axis_max=FIGURE_AXIS_MAX,
        steps=FIGURE_STEPS,
        figure=name,
    )
