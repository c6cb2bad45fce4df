from ttframes.frameworks.logging_config import LogSettings, get_logger, setup_logging

setup_logging(LogSettings.from_env())

__version__ = "0.1.0"

__all__ = ["LogSettings", "get_logger", "setup_logging", "__version__"]
