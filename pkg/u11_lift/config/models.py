"""Configuration models."""

from dataclasses import dataclass, field


@dataclass
class PrecisionConfig:
    """Working precision of numeric evaluations."""
    prec_bits: int = 128


@dataclass
class ProductConfig:
    """Product truncation defaults."""
    max_kl: int = 40
    tail_margin: float = 0.0
    region: str = "conservative"
    chamber_check: bool = False


@dataclass
class ChamberConfig:
    """Wall detection for inexact points."""
    wall_tolerance: float = 1e-12


@dataclass
class HeegnerConfig:
    """Heegner point search box."""
    coord_bound: int = 2


@dataclass
class ZeroOrderConfig:
    """Argument principle sampling."""
    radius: float = 0.05
    samples: int = 64
    max_refinements: int = 5


@dataclass
class LoggingConfig:
    """Log level and the optional run journal directory."""
    level: str = "WARNING"
    journal_dir: str = ""


@dataclass
class Config:
    """Main configuration container."""
    precision: PrecisionConfig = field(default_factory=PrecisionConfig)
    product: ProductConfig = field(default_factory=ProductConfig)
    chambers: ChamberConfig = field(default_factory=ChamberConfig)
    heegner: HeegnerConfig = field(default_factory=HeegnerConfig)
    zero_order: ZeroOrderConfig = field(default_factory=ZeroOrderConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)
