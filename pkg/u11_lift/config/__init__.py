"""U(1,1) Borcherds lift toolkit - Configuration package."""

from .loader import load_config
from .models import (
    ChamberConfig,
    Config,
    HeegnerConfig,
    LoggingConfig,
    PrecisionConfig,
    ProductConfig,
    ZeroOrderConfig,
)

__all__ = [
    "load_config",
    "Config",
    "PrecisionConfig",
    "ProductConfig",
    "ChamberConfig",
    "HeegnerConfig",
    "ZeroOrderConfig",
    "LoggingConfig",
]
