from coherence_kit.config.settings import Settings, SEED_ENV_VAR
from coherence_kit.config.defaults import presets

__all__ = ["Settings", "SEED_ENV_VAR", "presets"]
