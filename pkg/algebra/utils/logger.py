from typing import Optional
import logging
import sys
from datetime import datetime
from pathlib import Path

from config.settings import settings


class KernelLogger:
    def __init__(self, name: str, log_dir: Optional[str] = None, level: Optional[str] = None):
        self.logger = logging.getLogger(name)
        log_dir = log_dir if log_dir is not None else settings.log_dir

        # Handlers are attached once per logger name
        if not getattr(self.logger, "_kernel_configured", False):
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
            self.logger.addHandler(console_handler)

            if log_dir:
                path = Path(log_dir)
                path.mkdir(parents=True, exist_ok=True)
                log_file = path / f"{name}_{datetime.now().strftime('%Y%m%d')}.log"
                file_handler = logging.FileHandler(log_file)
                file_handler.setFormatter(
                    logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
                )
                self.logger.addHandler(file_handler)

            self.logger.propagate = False
            self.logger._kernel_configured = True

        self.logger.setLevel(level or settings.log_level)

    def set_level(self, level: str) -> None:
        self.logger.setLevel(level)

    def info(self, message: str) -> None:
        self.logger.info(message)

    def error(self, message: str) -> None:
        self.logger.error(message)

    def warning(self, message: str) -> None:
        self.logger.warning(message)

    def debug(self, message: str) -> None:
        self.logger.debug(message)


def set_global_level(level: str) -> None:
    """Apply a level to every logger created through KernelLogger."""
    for logger in list(logging.Logger.manager.loggerDict.values()):
        if isinstance(logger, logging.Logger) and getattr(logger, "_kernel_configured", False):
            logger.setLevel(level)
