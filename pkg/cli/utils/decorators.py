"""Decorators for command handlers."""

import logging
import os
from functools import wraps

from cli.utils.constants import EXIT_ERROR, EXIT_OK

logger = logging.getLogger("simplexnet")


def require_files(*attributes: str):
    """Decorator factory checking that the named argument paths exist before the command runs."""
    def decorator(f):
        @wraps(f)
        def decorated(args, *rest, **kwargs):
            for attribute in attributes:
                path = getattr(args, attribute, None)
                if path and not os.path.exists(path):
                    raise FileNotFoundError(f"Input file not found: {path}")
            return f(args, *rest, **kwargs)
        return decorated
    return decorator


def handle_exceptions(f):
    """Turn exceptions into a logged error and exit status 1."""
    @wraps(f)
    def decorated(*args, **kwargs):
        try:
            result = f(*args, **kwargs)
        except Exception as e:
            logger.debug("Error in %s: %s", f.__name__, e, exc_info=True)
            logger.error("%s failed: %s", f.__name__, e)
            return EXIT_ERROR
        return EXIT_OK if result is None else result
    return decorated
