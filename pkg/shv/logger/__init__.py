__all__ = [
    'log',
    'SUCCESS',
    'INFO',
    'WARNING',
    'ERROR',
    'DEBUG',
]

from logging import INFO, ERROR, DEBUG, WARNING

from .logger import CustomLogger
from .logger import SUCCESS

log = CustomLogger('SHV')
