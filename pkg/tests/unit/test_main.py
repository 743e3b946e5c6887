"""Unit tests for the command-line entrypoint."""

from unittest.mock import patch

import pytest

from qqcorr.core.errors import OptimizerFailureError, SweepPointError
from qqcorr.main import main
from qqcorr.schemas.sweep import CSV_COLUMNS

TINY = ["--coupling", "qubit", "--p", "0.15", "--axis-max", "1", "--steps", "2"]


@pytest.mark.unit
class TestMain:
    """Test exit codes and output routing."""

    def test_csv_to_file(self, tmp_path):
        """Test a successful sweep writes header plus one line per point."""
        out = tmp_path / "sweep.csv"

        assert main(TINY + ["--out", str(out)]) == 0

        lines = out.read_text().splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        assert len(lines) == 3
        assert lines[1].startswith("qubit,dephasing,0.15,0,0,")

    def test_csv_to_stdout(self, capsys):
        """Test stdout carries only CSV."""
        assert main(TINY) == 0

        out = capsys.readouterr().out
        assert out.splitlines()[0] == ",".join(CSV_COLUMNS)
        assert len(out.splitlines()) == 3

    def test_plot_script(self, tmp_path):
        """Test --plot writes a script pointing at the CSV."""
        out = tmp_path / "sweep.csv"
        plot = tmp_path / "sweep.gp"

        assert main(TINY + ["--out", str(out), "--plot", str(plot)]) == 0

        script = plot.read_text()
        assert 'data = "sweep.csv"' in script
        assert script.count("with lines") == 2

    def test_usage_error(self, capsys):
        """Test a bad flag exits with status 2 and a usage message."""
        assert main(["--coupling", "qubit", "--p", "0.9"]) == 2
        assert "usage:" in capsys.readouterr().err

    def test_help(self):
        """Test --help returns 0."""
        assert main(["--help"]) == 0

    def test_computation_failure(self, capsys):
        """Test a failing sweep point exits with status 1."""
        error = SweepPointError(0.15, 0.0, 0.0, OptimizerFailureError("boom"))
        with patch("qqcorr.main.run_sweep", side_effect=error), patch("qqcorr.main.logger") as mock_logger:
            assert main(TINY) == 1

        assert "qqcorr: error: evaluation failed at p=0.15" in capsys.readouterr().err
        mock_logger.error.assert_called_once()

    def test_io_failure(self, tmp_path, capsys):
        """Test an unwritable output path exits with status 1."""
        out = tmp_path / "missing" / "sweep.csv"

        assert main(TINY + ["--out", str(out)]) == 1
        assert "qqcorr: error:" in capsys.readouterr().err

    def test_oracle_report_only(self, capsys):
        """Test the report alone goes to stdout."""
        assert main(["--oracle-report"]) == 0

        out = capsys.readouterr().out
        assert out.split()[:2] == ["quantity", "reading"]
        assert "undefined" in out

    def test_oracle_report_with_stdout_csv(self, capsys):
        """Test the report moves to stderr when CSV owns stdout."""
        with patch("qqcorr.main.build_discrepancy_report", return_value=[]):
            assert main(TINY + ["--oracle-report"]) == 0

        captured = capsys.readouterr()
        assert captured.out.splitlines()[0] == ",".join(CSV_COLUMNS)
        assert "quantity" in captured.err
