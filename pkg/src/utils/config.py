"""
Configuration management for curvebounds
Loads and validates environment variables
"""

import os
from pathlib import Path
from dotenv import load_dotenv


class Config:
    """Application configuration"""

    # Load environment variables
    load_dotenv()

    # Paths
    BASE_DIR = Path(__file__).parent.parent.parent  # Project root
    LOGS_DIR = BASE_DIR / "logs"

    LOG_FILE = os.getenv("LOG_FILE", str(LOGS_DIR / "curvebounds.log"))
    OUTPUT_DIR = os.getenv("CURVEBOUNDS_OUTPUT_DIR", "output")

    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")

    # Enumeration and figures
    DEFAULT_MAX_ENUM = 120
    # Enumeration listings are paged; the count grows ~3.5x per 10 degrees
    DEFAULT_ENUM_PAGE = 1000
    ENUM_PAGE_MAX = 10000
    ENUM_OFFSET_MAX = 100000
    DEFAULT_FIGURE_MIN = 4
    DEFAULT_FIGURE_MAX = 300
    FIGURE_HARD_MAX = 2000

    @classmethod
    def _int_env(cls, name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        return int(raw)

    @classmethod
    def max_enum(cls) -> int:
        """
        Largest degree accepted by h-vector enumeration

        Read at call time so CURVEBOUNDS_MAX_ENUM can be changed per run.
        """
        return cls._int_env("CURVEBOUNDS_MAX_ENUM", cls.DEFAULT_MAX_ENUM)

    @classmethod
    def figure_range(cls) -> tuple[int, int]:
        """Default (d_min, d_max) for sign grids"""
        return (
            cls._int_env("CURVEBOUNDS_FIGURE_MIN", cls.DEFAULT_FIGURE_MIN),
            cls._int_env("CURVEBOUNDS_FIGURE_MAX", cls.DEFAULT_FIGURE_MAX),
        )

    @classmethod
    def workers(cls) -> int:
        """Worker threads used when filling grids"""
        return cls._int_env("CURVEBOUNDS_WORKERS", 1)

    @classmethod
    def validate(cls) -> list[str]:
        """Validate configuration and return list of errors"""
        errors = []

        if cls.LOG_LEVEL not in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            errors.append(f"Invalid LOG_LEVEL: {cls.LOG_LEVEL}")

        try:
            if cls.max_enum() < 9:
                errors.append(f"CURVEBOUNDS_MAX_ENUM must be at least 9, got {cls.max_enum()}")
        except ValueError:
            errors.append("CURVEBOUNDS_MAX_ENUM must be an integer")

        try:
            d_min, d_max = cls.figure_range()
            if not 4 <= d_min < d_max <= cls.FIGURE_HARD_MAX:
                errors.append(
                    f"Figure range must satisfy 4 <= min < max <= {cls.FIGURE_HARD_MAX}, "
                    f"got {d_min}..{d_max}"
                )
        except ValueError:
            errors.append("CURVEBOUNDS_FIGURE_MIN/CURVEBOUNDS_FIGURE_MAX must be integers")

        try:
            if cls.workers() < 1:
                errors.append(f"CURVEBOUNDS_WORKERS must be positive, got {cls.workers()}")
        except ValueError:
            errors.append("CURVEBOUNDS_WORKERS must be an integer")

        return errors

    @classmethod
    def get_log_path(cls) -> Path:
        """Get full log file path"""
        return cls.BASE_DIR / cls.LOG_FILE

    @classmethod
    def get_output_dir(cls) -> Path:
        """Get full output directory path"""
        return cls.BASE_DIR / cls.OUTPUT_DIR
