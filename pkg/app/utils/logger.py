"""
Logging configuration for the perfcone CLI.
Structured, color-coded diagnostics on stderr; stdout carries only data.
"""

import logging
import sys
from app.core.config import settings


# ── ANSI color codes ─────────────────────────────────────────────────
class Colors:
    RESET   = "\033[0m"
    BOLD    = "\033[1m"
    DIM     = "\033[2m"

    # Foreground
    RED     = "\033[91m"
    GREEN   = "\033[92m"
    YELLOW  = "\033[93m"
    CYAN    = "\033[96m"
    WHITE   = "\033[97m"
    GRAY    = "\033[90m"

    # Background
    BG_RED  = "\033[41m"


# ── Map log levels to colored labels ─────────────────────────────────
LEVEL_STYLES = {
    "DEBUG":    f"{Colors.GRAY}DEBUG{Colors.RESET}",
    "INFO":     f"{Colors.GREEN}INFO{Colors.RESET}",
    "WARNING":  f"{Colors.YELLOW}WARN{Colors.RESET}",
    "ERROR":    f"{Colors.RED}ERROR{Colors.RESET}",
    "CRITICAL": f"{Colors.BG_RED}{Colors.WHITE}CRIT{Colors.RESET}",
}

PLAIN_LEVELS = {
    "DEBUG": "DEBUG",
    "INFO": "INFO",
    "WARNING": "WARN",
    "ERROR": "ERROR",
    "CRITICAL": "CRIT",
}

# ── Short aliases for module names ───────────────────────────────────
MODULE_ALIASES = {
    "app.cli.commands":                 "cli",
    "app.cli.crosscheck":               "xcheck",
    "app.terms.boundary_terms":         "terms",
    "app.terms.assembly":               "assembly",
    "app.utils.logger":                 "logger",
}


class PrettyFormatter(logging.Formatter):
    """
    Structured log formatter that produces easily scannable output.

    Format:
        HH:MM:SS │ INFO │ module   │ message
    """

    COL_MODULE = 10  # short alias

    def __init__(self, color: bool = True):
        super().__init__()
        self.color = color

    def _paint(self, code: str, text: str) -> str:
        return f"{code}{text}{Colors.RESET}" if self.color else text

    def format(self, record: logging.LogRecord) -> str:
        time_str = self.formatTime(record, "%H:%M:%S")

        if self.color:
            level = LEVEL_STYLES.get(record.levelname, record.levelname[:4])
        else:
            level = PLAIN_LEVELS.get(record.levelname, record.levelname[:4])

        module_name = record.name
        short = MODULE_ALIASES.get(module_name)
        if not short:
            short = module_name.rsplit(".", 1)[-1]
        short = short[:self.COL_MODULE].ljust(self.COL_MODULE)

        sep = self._paint(Colors.DIM, "│")
        line = (
            f"{self._paint(Colors.GRAY, time_str)} {sep} {level} {sep} "
            f"{self._paint(Colors.CYAN, short)} {sep} {record.getMessage()}"
        )

        if record.exc_info and not record.exc_text:
            record.exc_text = self.formatException(record.exc_info)
        if record.exc_text:
            line += "\n" + self._paint(Colors.RED, record.exc_text)

        return line


def setup_logging() -> None:
    """Configure application logging on stderr."""

    color = settings.COLOR_LOGS and sys.stderr.isatty()
    if color:
        _enable_windows_ansi()

    log_level = logging.DEBUG if settings.DEBUG else getattr(
        logging, settings.LOG_LEVEL.upper(), logging.WARNING
    )

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(PrettyFormatter(color=color))

    root = logging.getLogger()
    root.setLevel(log_level)
    root.handlers.clear()
    root.addHandler(handler)

    logger = logging.getLogger(__name__)
    logger.debug(f"Logging ready: level={settings.LOG_LEVEL} color={color}")


def _enable_windows_ansi():
    """Enable ANSI escape sequences on Windows 10+ terminals."""
    try:
        import os
        if os.name == "nt":
            import ctypes
            kernel32 = ctypes.windll.kernel32
            kernel32.SetConsoleMode(kernel32.GetStdHandle(-12), 7)
    except Exception as e:
        sys.stderr.write(f"Failed to enable ANSI colors: {e}\n")
