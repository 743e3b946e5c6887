"""Command-line argument parsing into a validated SweepConfig."""

import argparse
import math
from pathlib import Path
from typing import List, Optional, Sequence

import structlog
from pydantic import ValidationError

from qqcorr.cli.presets import figure_names, figure_preset
from qqcorr.core.config import get_settings
from qqcorr.core.errors import ParameterRangeError
from qqcorr.schemas.scenario import Coupling, NoiseKind, QutritDephasingConvention
from qqcorr.schemas.sweep import Axis, SweepConfig, SweepSegment
from qqcorr.services.states import check_state_parameter

logger = structlog.get_logger()

DEFAULT_P_VALUES = "0.15,0.23"
DEFAULT_AXIS = {Coupling.QUBIT: Axis.A, Coupling.QUTRIT: Axis.B, Coupling.MULTILOCAL: Axis.A}
SWEEP_FLAGS = ("noise", "coupling", "p", "axis", "axis_max", "steps", "fixed")


def p_list(text: str) -> List[float]:
    """Parse a comma-separated list of state parameters in [0, 0.5]."""
    values = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            values.append(check_state_parameter(float(item)))
        except ValueError as exc:
            if isinstance(exc, ParameterRangeError):
                raise argparse.ArgumentTypeError(str(exc)) from None
            raise argparse.ArgumentTypeError(f"not a number: {item!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("expected at least one p value")
    return values


def non_negative(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value) or value < 0.0:
        raise argparse.ArgumentTypeError(f"expected a finite value >= 0, got {text}")
    return value


def positive(text: str) -> float:
    value = non_negative(text)
    if value == 0.0:
        raise argparse.ArgumentTypeError("expected a value > 0")
    return value


def at_least_two(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 2:
        raise argparse.ArgumentTypeError(f"steps must be >= 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="qqcorr",
        description=(
            "Evolve the one-parameter qubit-qutrit family under dephasing or "
            "amplitude damping and tabulate negativity, mutual information, "
            "classical correlation and discord as CSV."
        ),
    )
    parser.add_argument("--noise", choices=[k.value for k in NoiseKind], help="noise family (default: dephasing)")
    parser.add_argument("--coupling", choices=[c.value for c in Coupling], help="which subsystems are coupled")
    parser.add_argument("--p", type=p_list, help=f"comma-separated state parameters (default: {DEFAULT_P_VALUES})")
    parser.add_argument("--axis", choices=[a.value for a in Axis], help="t_gamma that varies along the sweep")
    parser.add_argument(
        "--axis-max", type=positive, help=f"upper end of the swept t_gamma (default: {settings.default_axis_max:g})"
    )
    parser.add_argument("--steps", type=at_least_two, help=f"grid points per curve (default: {settings.default_steps})")
    parser.add_argument("--fixed", type=non_negative, help="t_gamma of the non-swept side, multilocal only")
    parser.add_argument("--out", type=Path, help="CSV output file (default: stdout)")
    parser.add_argument("--plot", type=Path, help="also write a gnuplot script to this path; requires --out")
    parser.add_argument("--figure", choices=figure_names(), help="figure preset; overrides the sweep flags")
    parser.add_argument(
        "--oracle-report",
        action="store_true",
        help="print the closed-form discrepancy table; without sweep flags no sweep is run",
    )
    parser.add_argument(
        "--qutrit-dephasing",
        choices=[c.value for c in QutritDephasingConvention],
        default=QutritDephasingConvention.RECONCILED.value,
        help="coherence factor convention of the qutrit dephasing channel",
    )
    return parser


def _sweep_config(parser: argparse.ArgumentParser, args: argparse.Namespace) -> SweepConfig:
    settings = get_settings()
    # the script reads the CSV by file name, so stdout CSV cannot be plotted
    if args.plot is not None and args.out is None:
        parser.error("--plot needs --out: the gnuplot script reads the CSV file it names")

    common = dict(
        output_path=args.out,
        plot_path=args.plot,
        oracle_report=args.oracle_report,
        qutrit_dephasing=QutritDephasingConvention(args.qutrit_dephasing),
    )

    if args.figure:
        overridden = [flag for flag in SWEEP_FLAGS if getattr(args, flag) is not None]
        if overridden:
            logger.warning("Figure preset overrides sweep flags", figure=args.figure, ignored=overridden)
        return SweepConfig(**figure_preset(args.figure), **common)

    p_values = args.p or p_list(DEFAULT_P_VALUES)
    base = dict(
        noise=NoiseKind(args.noise or NoiseKind.DEPHASING.value),
        p_values=p_values,
        axis_max=args.axis_max or settings.default_axis_max,
        steps=args.steps or settings.default_steps,
    )

    if args.coupling is None:
        if not args.oracle_report:
            parser.error("one of --figure, --coupling or --oracle-report is required")
        extra = [flag for flag in SWEEP_FLAGS if getattr(args, flag) is not None]
        if extra:
            parser.error(f"--coupling is required with {', '.join('--' + f.replace('_', '-') for f in extra)}")
        return SweepConfig(**base, **common)

    coupling = Coupling(args.coupling)
    if args.fixed is not None and coupling is not Coupling.MULTILOCAL:
        parser.error(f"--fixed only applies to multilocal coupling, not {coupling.value}")

    segment = SweepSegment(
        label=coupling.value,
        coupling=coupling,
        axis=Axis(args.axis) if args.axis else DEFAULT_AXIS[coupling],
        fixed_t_gamma=args.fixed or 0.0,
    )
    return SweepConfig(**base, segments=[segment], **common)


def parse_args(argv: Optional[Sequence[str]] = None) -> SweepConfig:
    """
    Parse command-line flags into a validated configuration.

    Invalid flags, out-of-range values and inconsistent combinations exit
    through ``argparse`` with a usage message and status 2.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _sweep_config(parser, args)
    except ValidationError as exc:
        problems = "; ".join(error["msg"] for error in exc.errors())
        parser.error(problems)
