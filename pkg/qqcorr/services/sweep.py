"""Sweep runner, CSV writer and gnuplot script writer."""

import csv
import io
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import structlog

from qqcorr.core.config import get_settings
from qqcorr.core.errors import QQCorrError, SweepPointError
from qqcorr.schemas.scenario import NoiseKind, QutritDephasingConvention
from qqcorr.schemas.sweep import CSV_COLUMNS, Axis, CsvRow, SweepConfig, SweepSegment
from qqcorr.services.channels import evolve
from qqcorr.services.correlations import discord
from qqcorr.services.states import initial_state

logger = structlog.get_logger()


@dataclass(frozen=True)
class SweepTask:
    """One (segment, p, axis value) evaluation; picklable for worker processes."""
    segment: SweepSegment
    noise: NoiseKind
    qutrit_dephasing: QutritDephasingConvention
    p: float
    axis_value: float


def evaluate_point(task: SweepTask) -> CsvRow:
    """
    Evolve the initial state to one sweep point and measure its correlations.

    Raises:
        SweepPointError: Wrapping any library failure, with the offending point
    """
    scenario = task.segment.scenario_at(task.noise, task.axis_value, task.qutrit_dephasing)
    try:
        rho = evolve(initial_state(task.p), scenario)
        report = discord(rho)
    except (QQCorrError, ValueError, ArithmeticError) as exc:
        logger.error(
            "Sweep point failed",
            scenario=task.segment.label,
            p=task.p,
            t_gamma_A=scenario.t_gamma_a,
            t_gamma_B=scenario.t_gamma_b,
            error=str(exc),
        )
        raise SweepPointError(task.p, scenario.t_gamma_a, scenario.t_gamma_b, exc) from exc

    return CsvRow(
        scenario=task.segment.label,
        noise=task.noise,
        p=task.p,
        t_gamma_A=scenario.t_gamma_a,
        t_gamma_B=scenario.t_gamma_b,
        negativity=report.negativity,
        mutual_information=report.mutual_information,
        classical_correlation=report.classical_correlation,
        discord=report.discord,
        theta_opt=report.argmin.theta,
        phi_opt=report.argmin.phi,
    )


def plan_sweep(config: SweepConfig) -> List[SweepTask]:
    """Tasks in output order: segment order, then ascending p, then ascending axis value."""
    axis_values = [float(v) for v in config.axis_values()]
    return [
        SweepTask(
            segment=segment,
            noise=config.noise,
            qutrit_dephasing=config.qutrit_dephasing,
            p=p,
            axis_value=value,
        )
        for segment in config.segments
        for p in sorted(config.p_values)
        for value in axis_values
    ]


def run_sweep(config: SweepConfig, workers: Optional[int] = None) -> List[CsvRow]:
    """
    Evaluate every point of a sweep.

    Args:
        config: Validated sweep configuration
        workers: Worker processes; defaults to the ``sweep_workers`` setting.
            Rows come back in plan order whatever the worker count.

    Returns:
        List[CsvRow]: one row per (segment, p, axis value)

    Raises:
        SweepPointError: On the first failing point
    """
    workers = workers or get_settings().sweep_workers
    tasks = plan_sweep(config)
    start_time = time.time()

    logger.info(
        "Sweep started",
        figure=config.figure,
        noise=config.noise.value,
        segments=[segment.label for segment in config.segments],
        p_values=sorted(config.p_values),
        steps=config.steps,
        points=len(tasks),
        workers=workers,
    )

    try:
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                rows = list(pool.map(evaluate_point, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
        else:
            rows = [evaluate_point(task) for task in tasks]
    except Exception as e:
        duration_ms = int((time.time() - start_time) * 1000)
        logger.error(
            "Sweep failed",
            figure=config.figure,
            error=str(e),
            duration_ms=duration_ms,
            exc_info=True,
        )
        raise

    duration_ms = int((time.time() - start_time) * 1000)
    logger.info(
        "Sweep completed",
        figure=config.figure,
        rows=len(rows),
        duration_ms=duration_ms,
    )
    return rows


def _format(value) -> str:
    if isinstance(value, float):
        return format(value, ".12g")
    if isinstance(value, NoiseKind):
        return value.value
    return str(value)


def render_csv(rows: Sequence[CsvRow]) -> str:
    """CSV text with the fixed header; floats carry 12 significant digits."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_format(getattr(row, column)) for column in CSV_COLUMNS])
    return buffer.getvalue()


def emit_csv(rows: Sequence[CsvRow], path: Optional[Path]) -> None:
    """
    Write rows as CSV to ``path``, or to stdout when no path is given.

    Raises:
        OSError: If the file cannot be written
    """
    text = render_csv(rows)
    if path is None:
        sys.stdout.write(text)
        return
    Path(path).write_text(text, encoding="utf-8", newline="")
    logger.info("CSV written", path=str(path), rows=len(rows))


def _curves(rows: Sequence[CsvRow], config: SweepConfig) -> List[Tuple[SweepSegment, float, str]]:
    present: Dict[str, List[float]] = {}
    for row in rows:
        seen = present.setdefault(row.scenario, [])
        if row.p not in seen:
            seen.append(row.p)

    curves = []
    for segment in config.segments:
        for p in present.get(segment.label, []):
            for measure in segment.measures:
                curves.append((segment, p, measure.value))
    return curves


def render_plot_script(rows: Sequence[CsvRow], config: SweepConfig, csv_name: str) -> str:
    """
    Gnuplot script plotting one curve per (segment, p, measure) from the CSV.

    Rows are selected with a ternary filter on the scenario and p columns, so
    the script parses whether or not the CSV exists yet.
    """
    name = config.figure or "sweep"
    axes = {segment.axis for segment in config.segments}
    xlabel = "t{/Symbol G}_A" if axes == {Axis.A} else "t{/Symbol G}_B" if axes == {Axis.B} else "t{/Symbol G}_i"

    lines = [
        f"# {name}: {config.noise.value} noise",
        'set datafile separator ","',
        "set terminal pngcairo size 900,600 enhanced",
        f'set output "{name}.png"',
        f'set xlabel "{xlabel}"',
        'set ylabel "bits / negativity"',
        f"set xrange [0:{config.axis_max:g}]",
        "set key top right",
        "set grid",
        f'data = "{csv_name}"',
    ]

    plots = []
    for index, (segment, p, measure) in enumerate(_curves(rows, config)):
        x_column = CSV_COLUMNS.index("t_gamma_A" if segment.axis is Axis.A else "t_gamma_B") + 1
        y_column = CSV_COLUMNS.index(measure) + 1
        selector = f'(strcol(1) eq "{segment.label}" && abs($3 - {p:.12g}) < 1e-9 ? ${y_column} : NaN)'
        title = f"{measure.replace('_', ' ')} p={p:g} ({segment.label})"
        plots.append(
            f'data every ::1 using {x_column}:{selector} with lines lw 2 dt {index % 5 + 1} title "{title}"'
        )

    if plots:
        lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def emit_plot_script(rows: Sequence[CsvRow], path: Path, config: SweepConfig, csv_path: Optional[Path] = None) -> None:
    """
    Write the gnuplot script for a sweep next to its CSV.

    Raises:
        OSError: If the file cannot be written
    """
    if csv_path is not None:
        csv_name = Path(csv_path).name
    else:
        csv_name = f"{config.figure or 'sweep'}.csv"
        logger.warning("Plot script references an assumed CSV file", path=str(path), csv=csv_name)
    Path(path).write_text(render_plot_script(rows, config, csv_name), encoding="utf-8", newline="")
    logger.info("Plot script written", path=str(path), curves=len(_curves(rows, config)))
