"""settings.py - Configuration settings for the EDCN toolkit"""

import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from dotenv import dotenv_values
from loguru import logger


class Settings:
    """Application settings: built-in defaults, config file and environment overrides"""

    # =============================================================================
    # APPLICATION CONSTANTS
    # =============================================================================

    APP_NAME = "edcn"
    APP_VERSION = "1.0.0"
    APP_DESCRIPTION = "Equitable dominator colorings of line graphs of graph families"

    CONFIG_ENV_VAR = "EDCN_CONFIG"
    LOG_LEVEL_ENV_VAR = "EDCN_LOG_LEVEL"
    DEFAULT_CONFIG_FILE = "edcn.cfg"
    DEFAULT_LOG_LEVEL = "WARNING"

    # Solver budgets
    DEFAULT_MAX_NODES = 10 ** 8
    DEFAULT_MAX_TIME_S = 120.0
    DEFAULT_JOBS = 1

    # Oracle runs in sweeps are limited to line graphs of at most this many vertices
    DEFAULT_ORACLE_MAX_VERTICES = 12

    # Parameter sweep used by `table` and the full `check` run: (min, max) per family
    THEOREM_SWEEP: Dict[str, Tuple[int, int]] = {
        "bistar": (2, 10),
        "kab": (1, 7),
        "wheel": (4, 20),
        "helm": (4, 15),
        "gear": (3, 15),
        "sunlet": (3, 20),
        "friendship": (2, 15),
        "flower": (3, 12),
        "doublewheel": (3, 12),
    }

    # Repeating DOT fill palette, indexed by colour class
    DOT_PALETTE = [
        "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231",
        "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
        "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000",
        "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080",
    ]

    CSV_COLUMNS = ["family", "params", "formula", "construction_k", "oracle_value", "status"]

    # =============================================================================
    # CONFIG FILE
    # =============================================================================

    CONFIG_KEYS = ["max_nodes", "max_time", "oracle_max_vertices", "jobs", "log_level"]

    @classmethod
    def config_path(cls, explicit: Optional[str] = None) -> Optional[Path]:
        """Resolve the config file: explicit path, then $EDCN_CONFIG, then ./edcn.cfg"""
        if explicit:
            return Path(explicit)
        from_env = os.environ.get(cls.CONFIG_ENV_VAR)
        if from_env:
            return Path(from_env)
        default = Path(cls.DEFAULT_CONFIG_FILE)
        return default if default.is_file() else None

    @classmethod
    def load_config_file(cls, path: Optional[Path]) -> Dict[str, Any]:
        """Read key=value pairs, keeping only the known keys with usable values"""
        if path is None:
            return {}
        if not path.is_file():
            logger.warning(f"Config file not found: {path}")
            return {}

        from utils.helpers import ValidationHelper

        raw = dotenv_values(path)
        unknown = sorted(set(raw) - set(cls.CONFIG_KEYS))
        if unknown:
            logger.warning(f"Ignoring unknown config keys in {path}: {unknown}")

        config: Dict[str, Any] = {}
        if raw.get("max_nodes") is not None:
            config["max_nodes"] = ValidationHelper.positive_int(raw["max_nodes"], "max_nodes")
        if raw.get("max_time") is not None:
            config["max_time"] = ValidationHelper.positive_float(raw["max_time"], "max_time")
        if raw.get("oracle_max_vertices") is not None:
            config["oracle_max_vertices"] = ValidationHelper.non_negative_int(
                raw["oracle_max_vertices"], "oracle_max_vertices")
        if raw.get("jobs") is not None:
            config["jobs"] = ValidationHelper.positive_int(raw["jobs"], "jobs")
        if raw.get("log_level"):
            config["log_level"] = str(raw["log_level"]).upper()

        config = {key: value for key, value in config.items() if value is not None}
        logger.debug(f"Loaded config from {path}: {config}")
        return config

    # =============================================================================
    # RESOLVED VALUES (flag > environment > config file > default)
    # =============================================================================

    @classmethod
    def resolve(cls, key: str, flag_value: Any, config: Dict[str, Any]) -> Any:
        if flag_value is not None:
            return flag_value
        if key in config:
            return config[key]
        defaults = {
            "max_nodes": cls.DEFAULT_MAX_NODES,
            "max_time": cls.DEFAULT_MAX_TIME_S,
            "oracle_max_vertices": cls.DEFAULT_ORACLE_MAX_VERTICES,
            "jobs": cls.DEFAULT_JOBS,
        }
        return defaults[key]

    @classmethod
    def get_log_level(cls, flag_value: Optional[str] = None,
                      config: Optional[Dict[str, Any]] = None) -> str:
        """Get logging level"""
        if flag_value:
            return flag_value.upper()
        from_env = os.environ.get(cls.LOG_LEVEL_ENV_VAR)
        if from_env:
            return from_env.upper()
        if config and config.get("log_level"):
            return config["log_level"]
        return cls.DEFAULT_LOG_LEVEL

    @classmethod
    def sweep_families(cls) -> List[str]:
        return list(cls.THEOREM_SWEEP)

    @classmethod
    def get_app_info(cls) -> Dict[str, Any]:
        return {
            "name": cls.APP_NAME,
            "version": cls.APP_VERSION,
            "description": cls.APP_DESCRIPTION,
        }
