import os
import logging
import sys
from logging.handlers import RotatingFileHandler

from qrac_lab.utils.config import load_config

loggers = {}
main_log_handler = None
console_log_handler = None
log_format = '[%(asctime)s] - [%(name)s] - [%(levelname)s] - %(message)s'
log_file_name = 'qrac_lab.log'

ENV_QRAC_LAB_DEBUG_LEVEL = "QRAC_LAB_DEBUG_LEVEL"


def _log_level() -> int:
    env_level = os.getenv(ENV_QRAC_LAB_DEBUG_LEVEL)
    if env_level is None or env_level == "":
        return logging.WARNING
    return int(env_level)


def attach_lab_log_handler(logger):
    global main_log_handler
    global console_log_handler

    level = _log_level()

    # Create the file handler
    if main_log_handler is None:
        # Make sure the log directory exists
        log_dir = load_config().get("logging", "log_dir", fallback="logs")
        os.makedirs(log_dir, exist_ok=True)

        log_handler = RotatingFileHandler(
            os.path.join(log_dir, log_file_name),
            maxBytes=10 * 1024 * 1024,
            backupCount=5
        )
        log_handler.setFormatter(logging.Formatter(log_format))
        log_handler.setLevel(level)
        main_log_handler = log_handler

    # Console output goes to stderr, stdout belongs to the CLI tables
    if console_log_handler is None:
        log_handler = logging.StreamHandler(sys.stderr)
        log_handler.setFormatter(logging.Formatter(log_format))
        log_handler.setLevel(level)
        console_log_handler = log_handler

    if logger is not None:
        logger.addHandler(main_log_handler)
        logger.addHandler(console_log_handler)


def get_logger(logger_name='default'):
    if logger_name.startswith('qrac_lab.'):
        loggername = logger_name
    else:
        loggername = 'qrac_lab.{}'.format(logger_name)

    if loggers.get(loggername):
        return loggers.get(loggername)

    logger = logging.getLogger(loggername)
    attach_lab_log_handler(logger)
    logger.setLevel(1)
    logger.propagate = False

    loggers[loggername] = logger
    return logger
