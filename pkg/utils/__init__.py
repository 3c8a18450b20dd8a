"""Package initialization file"""

from .helpers import FormatHelper, IndexHelper, ValidationHelper, drop_none
from .exceptions import EDCNError

__all__ = [
    'FormatHelper',
    'IndexHelper',
    'ValidationHelper',
    'drop_none',
    'EDCNError',
]
