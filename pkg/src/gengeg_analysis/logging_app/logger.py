import logging
import os
from datetime import datetime

from gengeg_analysis.config.load_config import get_settings

_CONFIGURED = False


def configure_logging(log_dir: str | None = None) -> str:
    """Attach the timestamped run log file to the root logger; returns its path."""
    global _CONFIGURED
    settings = get_settings().logging

    LOG_FILE = f"{datetime.now().strftime('%m_%d_%Y_%H_%M_%S')}.log"
    path_logs = os.path.join(os.getcwd(), log_dir or settings.directory)
    PATH_LOG_FILE = os.path.join(path_logs, LOG_FILE)

    if _CONFIGURED:
        return PATH_LOG_FILE

    os.makedirs(path_logs, exist_ok=True)
    logging.basicConfig(
        filename=PATH_LOG_FILE,
        format=settings.format,
        level=getattr(logging, settings.level.upper(), logging.INFO),
    )
    _CONFIGURED = True
    return PATH_LOG_FILE
