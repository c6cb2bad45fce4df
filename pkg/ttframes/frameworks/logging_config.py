import functools
import logging
import logging.config
import os
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, Optional

from pydantic import BaseModel, ConfigDict, field_validator

from ttframes.entities.exceptions import TTFramesError


ROOT_LOGGER = "ttframes"
ENV_PREFIX = "TTFRAMES_"

FORMATS = {
    "simple": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    "detailed": "%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(funcName)s() - %(message)s",
    "json": "%(asctime)s | %(name)s | %(levelname)s | %(filename)s:%(lineno)d | %(funcName)s | %(message)s",
}
LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"
MAX_BYTES = 10 * 1024 * 1024
BACKUP_COUNT = 5


class LogSettings(BaseModel):
    """Logging options; stdout is never a log target."""

    model_config = ConfigDict(frozen=True)

    log_level: str = "WARNING"
    log_dir: Optional[Path] = None
    console_output: bool = True
    file_output: bool = False
    format_type: str = "simple"
    use_colors: bool = True

    @field_validator("log_level")
    @classmethod
    def known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LEVELS:
            raise ValueError(f"unknown log level {value}")
        return value

    @classmethod
    def from_env(cls) -> "LogSettings":
        """Read TTFRAMES_LOG_LEVEL, _LOG_DIR, _FILE_OUTPUT, _LOG_FORMAT and _USE_COLORS."""

        def flag(name: str, default: str) -> bool:
            return os.getenv(ENV_PREFIX + name, default).lower() == "true"

        return cls(
            log_level=os.getenv(ENV_PREFIX + "LOG_LEVEL", "WARNING"),
            log_dir=os.getenv(ENV_PREFIX + "LOG_DIR") or None,
            file_output=flag("FILE_OUTPUT", "false"),
            format_type=os.getenv(ENV_PREFIX + "LOG_FORMAT", "simple"),
            use_colors=flag("USE_COLORS", "true"),
        )

    @property
    def directory(self) -> Path:
        return self.log_dir or Path.cwd() / "logs"


class ColoredFormatter(logging.Formatter):
    COLORS = {
        'DEBUG': '\033[36m',      # Cyan
        'INFO': '\033[32m',       # Green
        'WARNING': '\033[33m',    # Yellow
        'ERROR': '\033[31m',      # Red
        'CRITICAL': '\033[35m',   # Magenta
    }

    BOLD = '\033[1m'
    RESET = '\033[0m'

    def __init__(self, *args, use_colors=True, **kwargs):
        super().__init__(*args, **kwargs)
        self.use_colors = use_colors and hasattr(sys.stderr, 'isatty') and sys.stderr.isatty()
        # fields before %(message)s
        self.header_fields = self._fmt.count(' - ')

    def format(self, record):
        text = super().format(record)
        color = self.COLORS.get(record.levelname) if self.use_colors else None
        if not color:
            return text
        if not self.header_fields:
            return text.replace(record.levelname, f"{self.BOLD}{color}{record.levelname}{self.RESET}", 1)
        parts = text.split(' - ', self.header_fields)
        header = ' - '.join(parts[:-1])
        return f"{self.BOLD}{color}{header}{self.RESET} - {parts[-1]}"


def _rotating(filename: Path, level: str) -> Dict[str, Any]:
    return {
        "class": "logging.handlers.RotatingFileHandler",
        "level": level,
        "formatter": "standard",
        "filename": str(filename),
        "maxBytes": MAX_BYTES,
        "backupCount": BACKUP_COUNT,
    }


def build_dict_config(settings: LogSettings) -> Dict[str, Any]:
    """dictConfig for the package logger; the root logger is left alone."""
    log_format = FORMATS.get(settings.format_type, FORMATS["simple"])
    handlers: Dict[str, Dict[str, Any]] = {}

    if settings.console_output:
        handlers["console"] = {
            "class": "logging.StreamHandler",
            "level": settings.log_level,
            "formatter": "colored",
            "stream": "ext://sys.stderr",
        }
    if settings.file_output:
        handlers["file"] = _rotating(settings.directory / "ttframes.log", settings.log_level)
        handlers["error_file"] = _rotating(settings.directory / "ttframes_errors.log", "ERROR")
    if not handlers:
        handlers["null"] = {"class": "logging.NullHandler"}

    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "standard": {"format": log_format, "datefmt": DATE_FORMAT},
            "colored": {
                "()": ColoredFormatter,
                "format": log_format,
                "datefmt": DATE_FORMAT,
                "use_colors": settings.use_colors,
            },
        },
        "handlers": handlers,
        "loggers": {
            ROOT_LOGGER: {
                "level": settings.log_level,
                "handlers": list(handlers),
                "propagate": False,
            }
        },
    }


class LoggerFactory:
    _settings: Optional[LogSettings] = None

    @classmethod
    def configure(cls, settings: LogSettings) -> None:
        """Apply settings once per process; later calls are ignored."""
        if cls._settings is not None:
            return
        if settings.file_output:
            settings.directory.mkdir(parents=True, exist_ok=True)
        logging.config.dictConfig(build_dict_config(settings))
        cls._settings = settings
        logging.getLogger(f"{ROOT_LOGGER}.logging_config").debug(
            f"Logging initialized - Level: {settings.log_level}, "
            f"Log dir: {settings.directory if settings.file_output else None}"
        )

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        if cls._settings is None:
            cls.configure(LogSettings.from_env())

        if name == "__main__":
            name = f"{ROOT_LOGGER}.main"
        elif not name.startswith(ROOT_LOGGER):
            name = f"{ROOT_LOGGER}.{name}"
        return logging.getLogger(name)


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """
    Get a logger below the package logger.

    Args:
        name: Logger name. If None, uses the calling module's __name__
    """
    if name is None:
        name = sys._getframe(1).f_globals.get('__name__', 'unknown')
    return LoggerFactory.get_logger(name)


def setup_logging(settings: Optional[LogSettings] = None, **overrides) -> None:
    """Configure from explicit settings, or from the environment plus keyword overrides."""
    if settings is None:
        settings = LogSettings.from_env()
    if overrides:
        settings = LogSettings(**{**settings.model_dump(), **overrides})
    LoggerFactory.configure(settings)


def log_execution_time(logger: Optional[logging.Logger] = None, level: str = "DEBUG") -> Callable:
    """
    Decorator logging how long a computation took.

    Domain errors are logged at the same level; anything else at ERROR.
    """
    def decorator(func):
        nonlocal logger
        if logger is None:
            logger = get_logger(func.__module__)
        log_level = getattr(logging, level.upper())

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                elapsed = time.perf_counter() - start_time
                failure_level = log_level if isinstance(e, TTFramesError) else logging.ERROR
                logger.log(failure_level, f"{func.__name__} failed after {elapsed:.3f}s: {e}")
                raise
            logger.log(log_level, f"{func.__name__} executed in {time.perf_counter() - start_time:.3f}s")
            return result
        return wrapper
    return decorator
