from coherence_kit.config.settings import Settings


class SettingsCollection:
    """Collection of named settings presets"""

    @property
    def default(self) -> Settings:
        """Double precision with ample headroom"""
        return Settings()

    @property
    def strict(self) -> Settings:
        """Tighter tolerances for well-conditioned inputs"""
        return Settings(
            state_tol=1e-11,
            pattern_tol=1e-11,
            completeness_tol=1e-11,
            region_tol=1e-11,
            case_tol=1e-11,
        )

    @property
    def desk(self) -> Settings:
        """Quick interactive runs"""
        return Settings(
            optimizer_restarts=8,
            chunk_size=1024,
            coverage_spacing=0.05,
            coverage_radius=0.05,
        )

    def names(self) -> list[str]:
        return ["default", "strict", "desk"]

    def get(self, name: str) -> Settings:
        if name not in self.names():
            raise KeyError(f"unknown settings profile {name!r}")
        return getattr(self, name)


presets = SettingsCollection()
