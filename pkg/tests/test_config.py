import pytest
from coherence_kit.config import SEED_ENV_VAR, Settings, presets
from coherence_kit.core.errors import ConfigurationError


def test_defaults():
    settings = Settings()
    assert settings.region_tol == 1e-9
    assert settings.optimizer_restarts == 32
    assert settings.sampler_attempts == 10_000
    assert settings.coverage_spacing == 0.02


def test_derive_ignores_unknown_keys():
    settings = Settings().derive(chunk_size=16, colour="blue")
    assert settings.chunk_size == 16
    assert not hasattr(settings, "colour")


def test_settings_are_frozen():
    with pytest.raises(AttributeError):
        Settings().chunk_size = 1


@pytest.mark.parametrize("raw,seed", [("42", 42), (" -3 ", -3), ("", 0), ("   ", 0)])
def test_seed_from_environment(raw, seed):
    assert Settings.from_env({SEED_ENV_VAR: raw}).default_seed == seed


def test_missing_environment_keeps_seed():
    assert Settings(default_seed=9).with_env({}).default_seed == 9


def test_bad_seed():
    with pytest.raises(ConfigurationError):
        Settings.from_env({SEED_ENV_VAR: "1.5"})


def test_presets():
    assert presets.names() == ["default", "strict", "desk"]
    assert presets.get("default") == Settings()
    assert presets.strict.region_tol < presets.default.region_tol
    assert presets.desk.chunk_size == 1024
    with pytest.raises(KeyError):
        presets.get("fast")
