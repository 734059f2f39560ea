"""Application configuration"""

from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings, overridable through EDGECALC_* environment variables"""

    model_config = SettingsConfigDict(
        env_prefix="EDGECALC_", env_file=".env", case_sensitive=False, extra="ignore"
    )

    # App settings
    log_level: str = "INFO"
    max_workers: int = 4

    # Seed override
    seed: Optional[int] = None  # EDGECALC_SEED, used only when neither file nor flags set one

    # Numerical settings
    degenerate_tol: float = 1e-10  # distance to a chart locus that counts as degenerate
    series_threshold: float = 1e-3  # r below which h and v switch to Taylor polynomials
    fd_step: float = 1e-5  # central-difference step for the chart Jacobian
    field_fd_step: float = 1e-3  # 4th-order stencil step for field derivatives
    bessel_l_max: int = 20
    positivity_threshold: float = 1e-12

    # Sentry settings
    sentry_dsn: Optional[str] = None
    sentry_environment: str = "development"
    sentry_traces_sample_rate: float = 0.0


settings = Settings()
