"""Configuration loader."""

import os
from pathlib import Path

import yaml
from dotenv import load_dotenv

from ..borcherds.models import MIN_PREC_BITS, REGIONS
from ..errors import InvalidInputError
from .models import (
    ChamberConfig,
    Config,
    HeegnerConfig,
    LoggingConfig,
    PrecisionConfig,
    ProductConfig,
    ZeroOrderConfig,
)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def _int(value, name: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name} must be an integer, got {value!r}") from exc


def _float(value, name: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name} must be a number, got {value!r}") from exc


def _bool(value) -> bool:
    if isinstance(value, bool):
        return value
    return str(value).lower() == "true"


def _validate(config: Config) -> Config:
    if config.precision.prec_bits < MIN_PREC_BITS:
        raise InvalidInputError(f"prec_bits must be >= {MIN_PREC_BITS}, got {config.precision.prec_bits}")
    if config.product.max_kl < 1:
        raise InvalidInputError(f"max_kl must be >= 1, got {config.product.max_kl}")
    if config.product.region not in REGIONS:
        raise InvalidInputError(f"region must be one of {', '.join(REGIONS)}, got {config.product.region!r}")
    if config.heegner.coord_bound < 1:
        raise InvalidInputError(f"coord_bound must be >= 1, got {config.heegner.coord_bound}")
    if config.zero_order.samples < 4 or config.zero_order.radius <= 0:
        raise InvalidInputError("zero_order needs samples >= 4 and a positive radius")
    if config.logging.level.upper() not in LOG_LEVELS:
        raise InvalidInputError(f"unknown log level {config.logging.level!r}")
    config.logging.level = config.logging.level.upper()
    return config


def load_config(config_path: str = "config.yaml") -> Config:
    """Load configuration from YAML file and environment."""
    load_dotenv()

    data = {}
    config_file = Path(config_path)
    if config_file.exists():
        with open(config_file) as f:
            data = yaml.safe_load(f) or {}

    precision_data = data.get("precision", {})
    product_data = data.get("product", {})
    chamber_data = data.get("chambers", {})
    heegner_data = data.get("heegner", {})
    zero_data = data.get("zero_order", {})
    logging_data = data.get("logging", {})

    # Environment overrides the file
    precision = PrecisionConfig(
        prec_bits=_int(os.getenv("U11_PREC", precision_data.get("prec_bits", 128)), "U11_PREC"),
    )
    product = ProductConfig(
        max_kl=_int(os.getenv("U11_MAX_KL", product_data.get("max_kl", 40)), "U11_MAX_KL"),
        tail_margin=_float(product_data.get("tail_margin", 0.0), "tail_margin"),
        region=str(product_data.get("region", "conservative")),
        chamber_check=_bool(product_data.get("chamber_check", False)),
    )
    chambers = ChamberConfig(
        wall_tolerance=_float(chamber_data.get("wall_tolerance", 1e-12), "wall_tolerance"),
    )
    heegner = HeegnerConfig(
        coord_bound=_int(heegner_data.get("coord_bound", 2), "coord_bound"),
    )
    zero_order = ZeroOrderConfig(
        radius=_float(zero_data.get("radius", 0.05), "radius"),
        samples=_int(zero_data.get("samples", 64), "samples"),
        max_refinements=_int(zero_data.get("max_refinements", 5), "max_refinements"),
    )
    logging_config = LoggingConfig(
        level=os.getenv("U11_LOG_LEVEL", str(logging_data.get("level", "WARNING"))),
        journal_dir=os.getenv("U11_JOURNAL_DIR", str(logging_data.get("journal_dir", "") or "")),
    )

    return _validate(Config(
        precision=precision,
        product=product,
        chambers=chambers,
        heegner=heegner,
        zero_order=zero_order,
        logging=logging_config,
    ))
