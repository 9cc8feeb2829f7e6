'''Package-wide logger facade.

Call sites read like ``Logger.info('...')`` and
``Logger.set_level(Logger.Level.Warn)``; records go to the ``penning``
logger of the :mod:`logging` package and are written to stderr, never to
stdout, so data written by the CLI stays byte-identical between runs.
'''
from __future__ import annotations

import enum
import logging
import sys

__all__ = ['Logger']

_LOGGER_NAME = 'penning'
_FORMAT = '[%(levelname)s] %(name)s: %(message)s'


def _backend() -> logging.Logger:
    logger = logging.getLogger(_LOGGER_NAME)
    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(_FORMAT))
        logger.addHandler(handler)
        logger.setLevel(logging.WARNING)
        logger.propagate = False
    return logger


class Logger:
    '''Static logging facade used throughout :mod:`penning`.'''

    class Level(enum.IntEnum):
        Debug = logging.DEBUG
        Info = logging.INFO
        Warn = logging.WARNING
        Error = logging.ERROR
        Critical = logging.CRITICAL

        @classmethod
        def from_name(cls, name: str) -> 'Logger.Level':
            '''Parse ``debug``/``info``/``warn``/``error``/``critical``.'''
            table = {
                'debug': cls.Debug,
                'info': cls.Info,
                'warn': cls.Warn,
                'warning': cls.Warn,
                'error': cls.Error,
                'critical': cls.Critical,
            }
            try:
                return table[name.lower()]
            except KeyError:
                raise ValueError(f'Unknown log level: {name}') from None

    @staticmethod
    def set_level(level: 'Logger.Level') -> None:
        _backend().setLevel(int(level))

    @staticmethod
    def level() -> 'Logger.Level':
        return Logger.Level(_backend().getEffectiveLevel())

    @staticmethod
    def debug(msg: str) -> None:
        _backend().debug(msg)

    @staticmethod
    def info(msg: str) -> None:
        _backend().info(msg)

    @staticmethod
    def warn(msg: str) -> None:
        _backend().warning(msg)

    @staticmethod
    def error(msg: str) -> None:
        _backend().error(msg)
