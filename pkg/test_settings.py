import pytest
from pydantic import ValidationError

from tools.settings import Settings, load_settings


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("MONOCLE_ORACLE_MAX_N", "MONOCLE_MAX_COMPONENT", "MONOCLE_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def test_defaults_from_yaml():
    settings = load_settings()
    assert settings.oracle.max_n == 16
    assert settings.oracle.max_component == 24
    assert settings.oracle.exact_objective_max_n == 12
    assert settings.search.cooling == 0.999
    assert settings.extractors.thm21k_threshold == "theorem"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("MONOCLE_ORACLE_MAX_N", "12")
    monkeypatch.setenv("MONOCLE_MAX_COMPONENT", "30")
    monkeypatch.setenv("MONOCLE_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.oracle.max_n == 12
    assert settings.oracle.max_component == 30
    assert settings.logging.level == "DEBUG"


def test_missing_file_falls_back_to_defaults(tmp_path):
    assert load_settings(str(tmp_path / "absent.yaml")) == Settings()


def test_invalid_values_are_rejected(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text("search:\n  cooling: 1.5\n")
    with pytest.raises(ValidationError):
        load_settings(str(path))
