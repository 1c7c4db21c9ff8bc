from functools import lru_cache
from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field

CONFIG_DIR = Path(__file__).resolve().parent


class SpecialSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    pochhammer_crossover: int = Field(64, ge=0)
    log_space_threshold: float = Field(30.0, gt=0)


class ExtremaSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    min_grid_points: int = Field(4096, ge=64)
    points_per_degree: int = Field(32, ge=1)
    min_interval_points: int = Field(256, ge=3)
    refine_candidates: int = Field(8, ge=1)
    theta_tolerance: float = Field(1e-12, gt=0)
    tie_tolerance: float = Field(1e-12, ge=0)
    max_golden_iterations: int = Field(200, ge=1)


class QuadratureSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    newton_max_iter: int = Field(50, ge=1)
    newton_tol: float = Field(1e-15, gt=0)
    cache_size: int = Field(512, ge=0)


class AsymptoticsSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_min: int = Field(100, ge=1)
    n_max: int = Field(2000, ge=1)
    samples: int = Field(16, ge=1)
    slope_tol: float = Field(0.05, gt=0)
    band_tol: float = Field(10.0, ge=1)
    fit_min_n: int = Field(100, ge=1)
    fact_n_values: tuple[int, ...] = (50, 100, 200, 400, 800, 1600)


class LoggingSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    directory: str = "logs"
    level: str = "INFO"
    format: str = "[ %(asctime)s ] %(lineno)d %(name)s - %(levelname)s - %(message)s"


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    special: SpecialSettings = SpecialSettings()
    extrema: ExtremaSettings = ExtremaSettings()
    quadrature: QuadratureSettings = QuadratureSettings()
    asymptotics: AsymptoticsSettings = AsymptoticsSettings()
    logging: LoggingSettings = LoggingSettings()


def load_config_yaml(config_name):
    with open(CONFIG_DIR / f"{config_name}.yaml", "r") as f:
        return yaml.safe_load(f)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.model_validate(load_config_yaml("defaults"))
