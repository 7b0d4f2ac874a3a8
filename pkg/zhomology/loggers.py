import logging
import sys

from logging.handlers import RotatingFileHandler
from typing import Any, Dict, List


logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _set_loggers(verbosity: int = 0) -> None:
    """
    Set the logging level for third party libraries
    :return: None
    """
    logging.getLogger('matplotlib').setLevel(
        logging.WARNING if verbosity <= 2 else logging.DEBUG
    )


def verbosity_level(verbosity: int) -> int:
    if verbosity <= 0:
        return logging.WARNING
    return logging.INFO if verbosity == 1 else logging.DEBUG


def setup_logging(config: Dict[str, Any]) -> None:
    """
    Process -v/--verbose, --logfile options
    """
    verbosity = config.get('verbosity', 0)

    # stdout carries the command output
    log_handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]

    if config.get('logfile'):
        log_handlers.append(RotatingFileHandler(config['logfile'],
                                                maxBytes=1024 * 1024,  # 1Mb
                                                backupCount=10))

    logging.basicConfig(
        level=verbosity_level(verbosity),
        format=LOG_FORMAT,
        handlers=log_handlers
    )
    _set_loggers(verbosity)
    logger.info('Verbosity set to %s', verbosity)
