"""Application configuration using pydantic-settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from WHITNEY_* environment variables or a .env file."""

    model_config = SettingsConfigDict(
        env_prefix="WHITNEY_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    log_level: str = "INFO"

    # Parallelism cap for verification trials and element assembly
    threads: int = 1

    # Verification defaults
    seed: int = 42
    trials: int = 100
    dims: str = "2,3,4"  # comma-separated
    signature: str = "both"  # euclid | lorentz | both
    fd_step: float = 1e-5

    # Wave runs
    circumference: float = 1.0  # spatial period L when --dx is not given
    courant: float = 0.8  # dt/dx on regular meshes when --dt is not given
    out_dir: str = "out"
    ply_radial_scale: float = 0.25  # radial displacement per unit field value, relative to radius

    def get_dims(self) -> list[int]:
        """Parse dimensions from comma-separated string."""
        if not self.dims:
            return []
        return [int(x.strip()) for x in self.dims.split(",") if x.strip()]

    def get_threads(self) -> int:
        """Thread cap, never below one."""
        return max(1, self.threads)


# Global settings instance
settings = Settings()
