"""Module with utility functions for logging"""
import logging
from logging.handlers import RotatingFileHandler

DEFAULT_LOG_FORMAT = '%(asctime)-15s \n%(name)s - %(levelname)s\n\n %(message)s\n\n'


def setup_rotating_file_logger(logger: logging.Logger, file_path: str, max_bytes: int = 2000000,
                               log_format: str = DEFAULT_LOG_FORMAT,
                               level: int = logging.ERROR) -> logging.Logger:
    """
    Attaches a size-rotated file handler (one backup) to the logger.
    Only records at `level` and above reach the file, so failed claims
    and internal errors of long verification runs are kept on disk
    """
    logger_handler = RotatingFileHandler(file_path, maxBytes=max_bytes, backupCount=1)
    logger_handler.setFormatter(logging.Formatter(log_format))
    logger_handler.setLevel(level)

    logger.addHandler(logger_handler)
    return logger


def remove_file_handlers(logger: logging.Logger) -> None:
    """Detaches and closes every rotating file handler of the logger"""
    for handler in list(logger.handlers):
        if isinstance(handler, RotatingFileHandler):
            logger.removeHandler(handler)
            handler.close()
