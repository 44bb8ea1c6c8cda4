from dataclasses import dataclass, fields, replace
from typing import Mapping, Optional
import os
from coherence_kit.core.errors import ConfigurationError

SEED_ENV_VAR = "COHERENCE_KIT_SEED"


@dataclass(frozen=True)
class Settings:
    """Numeric tolerances and sampling/optimizer budgets"""

    # Validation
    state_tol: float = 1e-9
    pattern_tol: float = 1e-9
    completeness_tol: float = 1e-9

    # Regions and synthesis
    region_tol: float = 1e-9
    case_tol: float = 1e-9

    # Sampler
    sampler_attempts: int = 10_000
    sio_fraction: float = 0.5
    chunk_size: int = 4096
    default_seed: int = 0

    # Extremum optimizer
    optimizer_restarts: int = 32
    optimizer_max_iter: int = 10_000
    stationarity_tol: float = 1e-10
    certify_tol: float = 1e-8

    # Coverage metric
    coverage_spacing: float = 0.02
    coverage_radius: float = 0.02

    def derive(self, **overrides) -> "Settings":
        """Create new settings based on these with overrides"""
        known = {f.name for f in fields(self)}
        return replace(self, **{k: v for k, v in overrides.items() if k in known})

    def with_env(self, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Apply COHERENCE_KIT_SEED as the default seed"""
        environ = os.environ if environ is None else environ
        raw = environ.get(SEED_ENV_VAR)
        if raw is None or raw.strip() == "":
            return self
        try:
            seed = int(raw.strip())
        except ValueError:
            raise ConfigurationError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")
        return self.derive(default_seed=seed)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        return cls().with_env(environ)
