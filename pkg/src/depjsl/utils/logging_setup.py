import logging
import sys
from typing import Optional

from depjsl.utils.config import Config

_FORMAT = "%(levelname)s | %(name)s | %(message)s"


class _StderrHandler(logging.StreamHandler):
    """Writes to whatever ``sys.stderr`` is at emit time, so captured stderr (CliRunner, capsys) sees it."""

    def __init__(self):
        super().__init__()

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, _value):
        # bound to sys.stderr; StreamHandler.__init__ and setStream assignments are dropped
        pass


def init_logger(name: str = "depjsl", level: Optional[int] = None) -> logging.Logger:
    """Attach one stderr handler to *name* (once) and set its level; ``None`` means ``Config.LOG_LEVEL``."""
    logger = logging.getLogger(name)
    if not any(isinstance(h, _StderrHandler) for h in logger.handlers):
        handler = _StderrHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(Config.log_level() if level is None else level)
    return logger
