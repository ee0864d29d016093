"""
Runtime configuration for the numeric carrier and tolerances
"""

import os
from typing import Optional

from pydantic import BaseModel, Field, field_validator

PRECISION_ENV = "QGRASS_PRECISION"
TOLERANCE_ENV = "QGRASS_TOL"
DEBUG_SYMMETRIC_ENV = "QGRASS_DEBUG_SYMMETRIC"


class Settings(BaseModel):
    """Process-wide toolkit settings"""
    precision: str = Field("double", description="double or extended:<bits>")
    rounding_threshold: float = Field(1e-6, gt=0)
    membership_tolerance: float = Field(1e-9, gt=0)
    zero_tolerance: float = Field(1e-9, gt=0)
    debug_symmetric: bool = False

    @field_validator("precision")
    @classmethod
    def check_precision(cls, value: str) -> str:
        value = value.strip().lower()
        if value == "double":
            return value
        if value.startswith("extended:"):
            bits = value.split(":", 1)[1]
            if bits.isdigit() and int(bits) >= 53:
                return f"extended:{int(bits)}"
        raise ValueError("precision must be 'double' or 'extended:<bits>' with bits >= 53")

    @property
    def extended_bits(self) -> Optional[int]:
        """Mantissa bits of the extended carrier, None in double mode"""
        if self.precision == "double":
            return None
        return int(self.precision.split(":", 1)[1])


def load_settings() -> Settings:
    """Build settings from the environment"""
    values = {}
    if os.environ.get(PRECISION_ENV):
        values["precision"] = os.environ[PRECISION_ENV]
    if os.environ.get(TOLERANCE_ENV):
        values["rounding_threshold"] = float(os.environ[TOLERANCE_ENV])
    if os.environ.get(DEBUG_SYMMETRIC_ENV):
        values["debug_symmetric"] = os.environ[DEBUG_SYMMETRIC_ENV].lower() in ("1", "true", "yes")
    return Settings(**values)


_settings: Settings = load_settings()


def get_settings() -> Settings:
    """Current settings"""
    return _settings


def configure(**overrides) -> Settings:
    """Replace settings and switch the numeric carrier accordingly"""
    global _settings
    _settings = Settings(**dict(_settings.model_dump(), **overrides))

    from app.numeric import activate_carrier
    activate_carrier(_settings)
    return _settings


def reset_settings() -> Settings:
    """Restore environment-derived defaults"""
    global _settings
    _settings = load_settings()

    from app.numeric import activate_carrier
    activate_carrier(_settings)
    return _settings
