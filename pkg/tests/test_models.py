"""Tests for pydantic models and settings."""

import pytest
from pydantic import ValidationError

from whitney.config import Settings
from whitney.models.mesh import MeshStyle
from whitney.models.metric import MetricSignature, SignatureKind
from whitney.models.report import Diagnostics, SliceDiagnostics, wrap_phase
from whitney.models.run_config import Command, RunConfig


class TestMetricSignature:
    """Tests for MetricSignature."""

    def test_lorentzian(self):
        """Time axis first with a negative sign."""
        g = MetricSignature.lorentzian(4)
        assert g.signs == (-1, 1, 1, 1)
        assert g.det_sign() == -1
        assert g.is_lorentzian
        assert str(g)

    def test_euclidean(self):
        """All signs positive."""
        g = MetricSignature.from_kind(SignatureKind.EUCLID, 3)
        assert g.det_sign() == 1
        assert not g.is_lorentzian

    def test_invalid_signs(self):
        """Signs must be +-1 and match the dimension."""
        with pytest.raises(ValidationError):
            MetricSignature(dim=2, signs=(1, 0))
        with pytest.raises(ValidationError):
            MetricSignature(dim=3, signs=(1, 1))
        with pytest.raises(ValidationError):
            MetricSignature(dim=7, signs=(1,) * 7)


class TestRunConfig:
    """Tests for RunConfig parsing and mesh resolution."""

    def test_parse_dims_and_signatures(self):
        """Comma strings are parsed into lists."""
        config = RunConfig(command=Command.VERIFY, dims="2, 4", signatures="lorentz")
        assert config.dims == [2, 4]
        assert config.signatures == [SignatureKind.LORENTZ]

    def test_both_signatures(self):
        """'both' expands to the two families."""
        config = RunConfig(command=Command.VERIFY, signatures="both")
        assert config.signatures == [SignatureKind.EUCLID, SignatureKind.LORENTZ]

    def test_rejects_unknown_fields(self):
        """Typos in configuration are errors."""
        with pytest.raises(ValidationError):
            RunConfig(command=Command.WAVE, nodez=10)

    def test_regular_mesh_spec(self):
        """30 nodes at Courant 0.8 over two periods need 76 slices."""
        spec = RunConfig(command=Command.WAVE, nodes=30).mesh_spec()
        assert spec.dx == pytest.approx(1 / 30)
        assert spec.dt == pytest.approx(0.8 / 30)
        assert spec.num_slices == 76

    def test_lightcone_mesh_spec(self):
        """Light-cone meshes default to dt = dx."""
        spec = RunConfig(command=Command.WAVE, nodes=40, style=MeshStyle.LIGHTCONE).mesh_spec()
        assert spec.dt == spec.dx
        assert spec.num_slices == 81

    def test_explicit_slices(self):
        """An explicit slice count wins over the period count."""
        assert RunConfig(command=Command.WAVE, nodes=8, slices=5).mesh_spec().num_slices == 5


class TestDiagnosticsModel:
    """Tests for the diagnostics summary."""

    @staticmethod
    def row(k: int, amp: float, phase: float) -> SliceDiagnostics:
        return SliceDiagnostics(
            slice=k, t=0.1 * k, l2_error=0.01 * k, mode1_amp=amp, mode1_phase=phase, exact_phase=0.0
        )

    def test_summary(self):
        """Drift is relative to the first slice; errors come from the last."""
        result = Diagnostics(slices=[self.row(0, 1.0, 0.0), self.row(1, 0.98, -0.1), self.row(2, 1.01, -0.2)])
        assert result.amplitude_drift() == pytest.approx(0.02)
        assert result.final_phase_error() == pytest.approx(-0.2)
        assert result.final_l2_error() == pytest.approx(0.02)
        assert result.max_l2_error() == pytest.approx(0.02)

    def test_empty(self):
        """An empty run reports zeros."""
        assert Diagnostics().amplitude_drift() == 0.0

    def test_drift_from_zero_amplitude(self):
        """Without initial mode-1 content the drift is the absolute growth."""
        result = Diagnostics(slices=[self.row(0, 0.0, 0.0), self.row(1, 0.003, 0.0), self.row(2, 0.001, 0.0)])
        assert result.amplitude_drift() == pytest.approx(0.003)

    def test_wrap_phase(self):
        """Angles are wrapped into [-pi, pi)."""
        import math

        assert wrap_phase(3 * math.pi / 2) == pytest.approx(-math.pi / 2)
        assert wrap_phase(-0.1) == pytest.approx(-0.1)


class TestSettings:
    """Tests for environment-driven settings."""

    def test_env_override(self, monkeypatch):
        """WHITNEY_* variables override defaults."""
        monkeypatch.setenv("WHITNEY_DIMS", "3,5")
        monkeypatch.setenv("WHITNEY_THREADS", "0")
        settings = Settings()
        assert settings.get_dims() == [3, 5]
        assert settings.get_threads() == 1
