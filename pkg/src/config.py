"""Run configuration: oracle guards, output format and determinism seed."""
import dataclasses
import os
from dataclasses import dataclass
from typing import Any

from dotenv import load_dotenv

load_dotenv()

OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True)
class Config:
    """Application configuration."""
    max_enum_carrier: int = 8  # Bell(8) = 4140 partitions
    max_sat_carrier: int = 4
    saturation_cap: int = 20000
    s_max: int = 6
    max_arity: int = 3
    output_format: str = "text"
    seed: int = 0
    max_workers: int = 4
    log_level: str = "INFO"

    def __post_init__(self):
        for name in ("max_enum_carrier", "max_sat_carrier", "saturation_cap", "s_max", "max_arity", "max_workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or value <= 0:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}")
        if self.log_level not in LOG_LEVELS:
            raise ValueError(f"log_level must be one of {LOG_LEVELS}, got {self.log_level!r}")

    @classmethod
    def from_env(cls) -> "Config":
        """Load configuration from environment variables."""
        try:
            return cls(
                max_enum_carrier=int(os.getenv("MAX_ENUM_CARRIER", "8")),
                max_sat_carrier=int(os.getenv("MAX_SAT_CARRIER", "4")),
                saturation_cap=int(os.getenv("SATURATION_CAP", "20000")),
                s_max=int(os.getenv("S_MAX", "6")),
                max_arity=int(os.getenv("MAX_ARITY", "3")),
                output_format=os.getenv("OUTPUT_FORMAT", "text").strip().lower(),
                seed=int(os.getenv("SEED", "0")),
                max_workers=int(os.getenv("MAX_WORKERS", "4")),
                log_level=os.getenv("LOG_LEVEL", "INFO").strip().upper(),
            )
        except ValueError as e:
            raise ValueError(f"Invalid configuration: {e}") from e

    def with_overrides(self, **overrides: Any) -> "Config":
        """Return a copy with the non-None overrides applied (validated again)."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return dataclasses.replace(self, **changes)
