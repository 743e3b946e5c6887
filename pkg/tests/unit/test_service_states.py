"""Unit tests for the initial-state family and density-matrix hygiene."""

import numpy as np
import pytest
from unittest.mock import patch

from qqcorr.core.cmatrix import hermitian_eigvals
from qqcorr.core.errors import DimensionError, InvalidStateError, ParameterRangeError
from qqcorr.models.state import DensityMatrix
from qqcorr.services.states import (
    KET_00,
    KET_01,
    KET_02,
    KET_10,
    KET_11,
    KET_12,
    check_state_parameter,
    initial_state,
    require_valid,
    validate,
)

from tests.helpers import REFERENCE_P_VALUES


@pytest.mark.unit
class TestInitialState:
    """Test the one-parameter family."""

    def test_entries(self):
        """Test populations and coherences at p=0.15."""
        m = initial_state(0.15).matrix

        for i, j, w in ((KET_00, KET_12, 0.075), (KET_01, KET_11, 0.075), (KET_02, KET_10, 0.35)):
            assert m[i, i] == pytest.approx(w)
            assert m[j, j] == pytest.approx(w)
            assert m[i, j] == pytest.approx(w)
            assert m[j, i] == pytest.approx(w)
        assert np.count_nonzero(m) == 12

    @pytest.mark.parametrize("p", REFERENCE_P_VALUES)
    def test_unit_trace(self, p):
        """Test trace is exactly one across the family."""
        assert abs(np.trace(initial_state(p).matrix) - 1.0) < 1e-15

    @pytest.mark.parametrize("p", REFERENCE_P_VALUES)
    def test_spectrum(self, p):
        """Test eigenvalues are {0, 0, 0, p, p, 1-2p}."""
        values = hermitian_eigvals(initial_state(p).matrix)
        expected = np.sort([0.0, 0.0, 0.0, p, p, 1.0 - 2.0 * p])
        assert np.allclose(values, expected, atol=1e-12)

    def test_matrix_is_read_only(self):
        """Test the stored array cannot be mutated."""
        rho = initial_state(0.2)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 1.0

    @pytest.mark.parametrize("p", [-0.01, 0.51, float("nan"), float("inf")])
    def test_out_of_range(self, p):
        """Test p outside [0, 0.5] is refused."""
        with pytest.raises(ParameterRangeError):
            initial_state(p)

    def test_check_state_parameter_returns_float(self):
        """Test boundaries are accepted and coerced."""
        assert check_state_parameter(0) == 0.0
        assert isinstance(check_state_parameter(0), float)
        assert check_state_parameter(0.5) == 0.5


@pytest.mark.unit
class TestValidate:
    """Test the hygiene report."""

    @pytest.mark.parametrize("p", REFERENCE_P_VALUES)
    def test_family_passes(self, p):
        """Test every member of the family is a valid state."""
        report = validate(initial_state(p))

        assert report.passed
        assert report.describe() == "valid"

    def test_identity_trace_defect(self):
        """Test I_6 fails only on trace."""
        report = validate(np.eye(6))

        assert report.trace_defect == pytest.approx(5.0)
        assert report.min_eigenvalue == pytest.approx(1.0)
        assert report.hermitian_ok and report.psd_ok
        assert not report.trace_ok
        assert not report.passed
        assert "trace defect" in report.describe()

    def test_hermiticity_failure(self):
        """Test an asymmetric perturbation is reported."""
        m = initial_state(0.15).matrix.copy()
        m[KET_00, KET_01] += 1e-3

        report = validate(m)

        assert report.hermiticity_defect == pytest.approx(1e-3)
        assert not report.hermitian_ok
        assert report.trace_ok
        assert "hermiticity defect" in report.describe()

    def test_negative_eigenvalue(self):
        """Test a non-positive matrix of unit trace fails the PSD check."""
        m = np.diag([1.2, -0.2, 0.0, 0.0, 0.0, 0.0])

        report = validate(m)

        assert report.min_eigenvalue == pytest.approx(-0.2)
        assert not report.psd_ok
        assert report.trace_ok

    def test_wrong_shape(self):
        """Test non-6x6 input is refused."""
        with pytest.raises(DimensionError):
            validate(np.eye(4) / 4)

    def test_tolerance_from_settings(self):
        """Test a looser trace tolerance accepts a small defect."""
        m = initial_state(0.15).matrix * (1.0 + 1e-6)
        assert not validate(m).trace_ok

        with patch.dict("os.environ", {"QQCORR_TRACE_TOLERANCE": "1e-5"}):
            from qqcorr.core.config import get_settings
            get_settings.cache_clear()
            assert validate(m).trace_ok


@pytest.mark.unit
class TestRequireValid:
    """Test the raising guard."""

    def test_valid_passthrough(self, rho_015):
        """Test a valid state is returned unchanged."""
        assert require_valid(rho_015) is rho_015

    def test_invalid_raises_with_report(self):
        """Test the failing report travels with the exception."""
        rho = DensityMatrix(np.eye(6))

        with patch("qqcorr.services.states.logger") as mock_logger:
            with pytest.raises(InvalidStateError, match="invalid input: trace defect") as exc_info:
                require_valid(rho, context="input")

        assert exc_info.value.report is not None
        assert not exc_info.value.report.trace_ok
        mock_logger.warning.assert_called_once()


@pytest.mark.unit
class TestDensityMatrix:
    """Test the model wrapper."""

    def test_shape_enforced(self):
        """Test only 6x6 matrices are accepted."""
        with pytest.raises(DimensionError):
            DensityMatrix(np.eye(3))

    def test_repr(self, rho_015):
        """Test the short representation."""
        assert repr(rho_015) == "<DensityMatrix(6x6)>"

    def test_to_dict(self, rho_015):
        """Test JSON-friendly export."""
        data = rho_015.to_dict()

        assert data["shape"] == [6, 6]
        assert data["real"][KET_02][KET_10] == pytest.approx(0.35)
        assert data["imag"][0] == [0.0] * 6

    def test_equality(self):
        """Test equality compares entries."""
        assert initial_state(0.2) == initial_state(0.2)
        assert initial_state(0.2) != initial_state(0.3)

    def test_dims(self, rho_015):
        """Test factor dimensions are qubit first."""
        assert rho_015.dims == (2, 3)
