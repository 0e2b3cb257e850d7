"""Configuration management for chromakh."""

import os
from pathlib import Path
from typing import Optional

import yaml

VALID_FIELDS = ["q", "f2"]
VALID_VARIANTS = ["contract_full", "contract_kernel", "expand_full", "expand_cokernel"]


class Config:
    """Configuration container for chromakh."""

    def __init__(self, config_file: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            config_file: Path to YAML configuration file
        """
        # Default values
        self.field = "q"
        self.variant = "contract_full"
        self.check_invariants = True
        self.check_limit = 4096
        self.d_squared_limit = 20000

        self.enable_caching = True
        self.cache_dir = ".chromakh-cache"

        self.seed = 0
        self.max_n = 8
        self.max_cable_crossings = 12
        self.desk = False
        self.verbose = False

        # Load from file if provided
        if config_file and Path(config_file).exists():
            self._load_from_file(config_file)

        # Override with environment variables
        self._load_from_env()

        self._validate_config()

    def _load_from_file(self, config_file: str):
        """Load configuration from YAML file."""
        with open(config_file, "r") as f:
            data = yaml.safe_load(f) or {}

        if "computation" in data:
            section = data["computation"] or {}
            self.field = section.get("field", self.field)
            self.variant = section.get("variant", self.variant)
            self.check_invariants = section.get("check_invariants", self.check_invariants)
            self.check_limit = section.get("check_limit", self.check_limit)
            self.d_squared_limit = section.get("d_squared_limit", self.d_squared_limit)

        if "cache" in data:
            section = data["cache"] or {}
            self.enable_caching = section.get("enabled", self.enable_caching)
            self.cache_dir = section.get("dir", self.cache_dir)

        if "verify" in data:
            section = data["verify"] or {}
            self.seed = section.get("seed", self.seed)
            self.max_n = section.get("max_n", self.max_n)
            self.max_cable_crossings = section.get("max_cable_crossings", self.max_cable_crossings)

    def _load_from_env(self):
        """Load configuration from environment variables."""
        if "CHROMAKH_CACHE_DIR" in os.environ:
            self.cache_dir = os.environ["CHROMAKH_CACHE_DIR"]

        if "CHROMAKH_FIELD" in os.environ:
            self.field = os.environ["CHROMAKH_FIELD"]

        if "CHROMAKH_VARIANT" in os.environ:
            self.variant = os.environ["CHROMAKH_VARIANT"]

        if "CHROMAKH_SEED" in os.environ:
            self.seed = int(os.environ["CHROMAKH_SEED"])

        if os.environ.get("CHROMAKH_NO_CACHE"):
            self.enable_caching = False

    def _validate_config(self):
        """Validate configuration for early error detection."""
        if self.field not in VALID_FIELDS:
            raise ValueError(f"Invalid field: {self.field}. Must be one of {VALID_FIELDS}")

        if self.variant not in VALID_VARIANTS:
            raise ValueError(f"Invalid variant: {self.variant}. Must be one of {VALID_VARIANTS}")

        if self.seed < 0:
            raise ValueError(f"Invalid seed: {self.seed}. Must be non-negative")

        if self.max_n < 0:
            raise ValueError(f"Invalid max_n: {self.max_n}. Must be non-negative")

        if self.max_cable_crossings < 0:
            raise ValueError(
                f"Invalid max_cable_crossings: {self.max_cable_crossings}. Must be non-negative"
            )

        if self.check_limit <= 0:
            raise ValueError(f"Invalid check_limit: {self.check_limit}. Must be positive")

        if self.d_squared_limit < 0:
            raise ValueError(f"Invalid d_squared_limit: {self.d_squared_limit}. Must be non-negative")
