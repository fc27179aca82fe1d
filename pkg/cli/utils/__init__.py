"""Utility functions and helpers."""

from . import config
from . import constants
from . import decorators
from . import responses
from . import validators

__all__ = [
    'config',
    'constants',
    'decorators',
    'responses',
    'validators',
]
