"""Command-line entrypoint."""

import sys
from typing import Optional, Sequence

import structlog

from qqcorr.cli.args import parse_args
from qqcorr.core.config import get_settings
from qqcorr.core.errors import QQCorrError
from qqcorr.core.logging import configure_logging
from qqcorr.services.oracles import build_discrepancy_report, format_discrepancy_report
from qqcorr.services.sweep import emit_csv, emit_plot_script, run_sweep

logger = structlog.get_logger()


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one CLI invocation.

    Returns:
        int: 0 on success, 1 on a computation or I/O failure, 2 on a usage error
    """
    settings = get_settings()
    configure_logging(settings)

    try:
        config = parse_args(argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2

    logger.info("Starting qqcorr", version=settings.app_version, env=settings.app_env, figure=config.figure)

    try:
        if config.oracle_report:
            report = format_discrepancy_report(build_discrepancy_report())
            # keep stdout clean for CSV when both go to the terminal
            stream = sys.stderr if config.sweep_requested and config.output_path is None else sys.stdout
            stream.write(report)

        if config.sweep_requested:
            rows = run_sweep(config)
            emit_csv(rows, config.output_path)
            if config.plot_path is not None:
                emit_plot_script(rows, config.plot_path, config, csv_path=config.output_path)
    except QQCorrError as e:
        logger.error("Run failed", error=str(e), error_type=type(e).__name__)
        print(f"qqcorr: error: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        logger.error("I/O failure", error=str(e))
        print(f"qqcorr: error: {e}", file=sys.stderr)
        return 1

    return 0
