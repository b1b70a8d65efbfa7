"""
Unit tests for configuration loading.
"""
import os
from unittest.mock import patch

import pytest

from u11_lift.config import Config, load_config
from u11_lift.errors import InvalidInputError

ENV_KEYS = ("U11_PREC", "U11_MAX_KL", "U11_LOG_LEVEL", "U11_JOURNAL_DIR")


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep the caller's environment and any .env file out of the tests."""
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)
    with patch("u11_lift.config.loader.load_dotenv"):
        yield


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "precision:\n"
        "  prec_bits: 192\n"
        "product:\n"
        "  max_kl: 60\n"
        "  region: theorem\n"
        "  chamber_check: true\n"
        "heegner:\n"
        "  coord_bound: 3\n"
        "logging:\n"
        "  level: debug\n"
    )
    return path


class TestLoadConfig:
    """Tests for load_config."""

    def test_defaults_without_file(self, tmp_path):
        """Test a missing file gives the defaults."""
        config = load_config(str(tmp_path / "missing.yaml"))
        assert config == Config()
        assert config.precision.prec_bits == 128
        assert config.product.region == "conservative"

    def test_values_from_file(self, config_file):
        """Test values read from YAML."""
        config = load_config(str(config_file))
        assert config.precision.prec_bits == 192
        assert config.product.max_kl == 60
        assert config.product.region == "theorem"
        assert config.product.chamber_check is True
        assert config.heegner.coord_bound == 3
        assert config.zero_order.samples == 64

    def test_level_is_normalized(self, config_file):
        """Test the log level is upper-cased."""
        assert load_config(str(config_file)).logging.level == "DEBUG"

    def test_environment_overrides_file(self, config_file):
        """Test U11_* variables take precedence over the file."""
        with patch.dict(os.environ, {"U11_PREC": "256", "U11_MAX_KL": "80", "U11_JOURNAL_DIR": "runs"}):
            config = load_config(str(config_file))
        assert config.precision.prec_bits == 256
        assert config.product.max_kl == 80
        assert config.logging.journal_dir == "runs"

    def test_non_integer_environment(self, tmp_path):
        """Test a malformed integer is an input error."""
        with patch.dict(os.environ, {"U11_PREC": "lots"}):
            with pytest.raises(InvalidInputError):
                load_config(str(tmp_path / "missing.yaml"))

    @pytest.mark.parametrize("text", [
        "precision:\n  prec_bits: 32\n",
        "product:\n  region: anywhere\n",
        "heegner:\n  coord_bound: 0\n",
        "zero_order:\n  samples: 2\n",
        "logging:\n  level: chatty\n",
    ])
    def test_invalid_values(self, tmp_path, text):
        """Test out-of-range values are rejected."""
        path = tmp_path / "config.yaml"
        path.write_text(text)
        with pytest.raises(InvalidInputError):
            load_config(str(path))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
