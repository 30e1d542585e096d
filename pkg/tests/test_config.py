import pytest

from src.config import Config


def test_defaults(monkeypatch):
    for name in ("MAX_ENUM_CARRIER", "MAX_SAT_CARRIER", "SATURATION_CAP", "S_MAX", "OUTPUT_FORMAT", "SEED"):
        monkeypatch.delenv(name, raising=False)
    config = Config.from_env()
    assert config.max_enum_carrier == 8
    assert config.max_sat_carrier == 4
    assert config.saturation_cap == 20000
    assert config.s_max == 6
    assert config.output_format == "text"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("S_MAX", "3")
    monkeypatch.setenv("OUTPUT_FORMAT", "JSON")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    config = Config.from_env()
    assert config.s_max == 3
    assert config.output_format == "json"
    assert config.log_level == "DEBUG"


def test_cli_overrides_skip_missing_values():
    config = Config().with_overrides(seed=5, s_max=None, output_format="json")
    assert config.seed == 5
    assert config.s_max == 6
    assert config.output_format == "json"


@pytest.mark.parametrize(
    "changes",
    [{"max_enum_carrier": 0}, {"saturation_cap": -1}, {"output_format": "xml"}, {"log_level": "LOUD"}],
)
def test_invalid_values(changes):
    with pytest.raises(ValueError):
        Config(**changes)
    with pytest.raises(ValueError):
        Config().with_overrides(**changes)


def test_unparseable_environment(monkeypatch):
    monkeypatch.setenv("MAX_WORKERS", "many")
    with pytest.raises(ValueError, match="Invalid configuration"):
        Config.from_env()
