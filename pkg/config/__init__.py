"""Package initialization file"""

from .settings import Settings

__all__ = ['Settings']
