"""Size guard for brute-force work.

The effective limit is, in order of precedence: an explicit ``set_max_size``
call, the ``CATKIT_MAX_SIZE`` environment variable, the default of 600.
"""
import os

from .errors import InputError, ResourceError

DEFAULT_MAX_SIZE = 600

_override = None


def set_max_size(value):
    global _override
    if value is not None and value < 1:
        raise InputError("max size must be positive")
    _override = value


def max_size():
    if _override is not None:
        return _override
    env = os.environ.get("CATKIT_MAX_SIZE")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise InputError(f"CATKIT_MAX_SIZE is not an integer: {env!r}") from None
        if value < 1:
            raise InputError("CATKIT_MAX_SIZE must be positive")
        return value
    return DEFAULT_MAX_SIZE


def guard(size, what):
    limit = max_size()
    if size > limit:
        raise ResourceError(f"{what} needs {size} carrier elements, limit is {limit}")
