"""helpers.py - Utility functions"""

from typing import Any, Dict, Mapping, Optional

from loguru import logger


class IndexHelper:
    """Index arithmetic shared by the family generators and coloring schemes"""

    @staticmethod
    def wrap(i: int, t: int) -> int:
        """1-based wraparound: t maps to t, t+1 maps to 1, 0 maps to t"""
        return (i - 1) % t + 1

    @staticmethod
    def ceil_div(a: int, b: int) -> int:
        """Ceiling of a / b for non-negative integers"""
        return -(-a // b)


class FormatHelper:
    """Formatting helpers for logs, tables and error messages"""

    @staticmethod
    def format_params(params: Mapping[str, int]) -> str:
        """Render parameters as `t=5` or `a=2 b=3`"""
        return " ".join(f"{key}={value}" for key, value in params.items())

    @staticmethod
    def format_duration_ms(seconds: float) -> int:
        return int(round(seconds * 1000))

    @staticmethod
    def format_sizes(sizes: Mapping[int, int]) -> str:
        """Render a size histogram such as `1x3 2x4`"""
        return " ".join(f"{size}x{count}" for size, count in sorted(sizes.items()))


class ValidationHelper:
    """Parsing of loosely typed configuration values"""

    @staticmethod
    def positive_int(value: Any, name: str) -> Optional[int]:
        """Return value as a positive int, or None (with a warning) if it is not one"""
        try:
            parsed = int(value)
        except (TypeError, ValueError):
            logger.warning(f"Ignoring non-integer value for {name}: {value!r}")
            return None
        if parsed <= 0:
            logger.warning(f"Ignoring non-positive value for {name}: {parsed}")
            return None
        return parsed

    @staticmethod
    def non_negative_int(value: Any, name: str) -> Optional[int]:
        try:
            parsed = int(value)
        except (TypeError, ValueError):
            logger.warning(f"Ignoring non-integer value for {name}: {value!r}")
            return None
        if parsed < 0:
            logger.warning(f"Ignoring negative value for {name}: {parsed}")
            return None
        return parsed

    @staticmethod
    def positive_float(value: Any, name: str) -> Optional[float]:
        try:
            parsed = float(value)
        except (TypeError, ValueError):
            logger.warning(f"Ignoring non-numeric value for {name}: {value!r}")
            return None
        if parsed <= 0:
            logger.warning(f"Ignoring non-positive value for {name}: {parsed}")
            return None
        return parsed


def drop_none(values: Dict[str, Any]) -> Dict[str, Any]:
    """Copy of values without the None entries"""
    return {key: value for key, value in values.items() if value is not None}
