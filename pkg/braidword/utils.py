import logging
import os
import sys
import threading

DEFAULT_LOG_LEVEL = os.environ.get("BRAIDWORD_LOG_LEVEL", "INFO")


# Global log level configuration with thread safety
class _LogLevelManager:
    def __init__(self, level: str = DEFAULT_LOG_LEVEL):
        self._level = level.upper()
        self._lock = threading.Lock()

    def set_level(self, level: str) -> None:
        with self._lock:
            self._level = level.upper()

    def get_level(self) -> str:
        with self._lock:
            return self._level


_log_level_manager = _LogLevelManager()


def set_global_log_level(level: str) -> None:
    """
    Set the global log level for the entire application.

    Loggers that were already created pick the new level up on their next
    `get_logger` call; `refresh_loggers` updates all of them at once.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    """
    _log_level_manager.set_level(level)
    refresh_loggers()


def get_global_log_level() -> str:
    """Get the current global log level."""
    return _log_level_manager.get_level()


def setup_logger(name: str, level: str = None) -> logging.Logger:
    """
    Set up a centralized logger with consistent formatting.

    Records go to stderr: stdout is reserved for command output
    (normal forms, converted payloads, CSV).

    Args:
        name: Logger name (usually __name__)
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
               If None, uses the global log level.

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger(name)
    effective_level = level if level is not None else get_global_log_level()
    numeric_level = getattr(logging, effective_level.upper())

    if logger.handlers:
        # Update existing logger's level if needed
        logger.setLevel(numeric_level)
        for handler in logger.handlers:
            handler.setLevel(numeric_level)
        return logger

    logger.setLevel(numeric_level)

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(numeric_level)
    formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s", datefmt="%Y-%m-%d %H:%M:%S")
    handler.setFormatter(formatter)

    logger.addHandler(handler)
    logger.propagate = False

    return logger


def get_logger(name: str, level: str = None) -> logging.Logger:
    """Get or create a logger with the given name using the global log level by default."""
    return setup_logger(name, level)


def refresh_loggers() -> None:
    """Re-apply the global level to every package logger created so far."""
    for name in list(logging.root.manager.loggerDict):
        if name == "braidword" or name.startswith("braidword."):
            logger = logging.getLogger(name)
            if logger.handlers:
                setup_logger(name)
