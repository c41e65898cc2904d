"""Optional numba acceleration.

Set ``PRASYM_DISABLE_NUMBA=1`` to force the pure Python / numpy code paths.
"""
import os

_disabled = os.environ.get("PRASYM_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - exercised by the fallback run
    _njit = None
    NUMBA_ENABLED = False


def njit(*args, **kws):
    """``numba.njit`` when available, otherwise a no-op decorator."""
    if NUMBA_ENABLED:
        return _njit(*args, **kws)
    if len(args) == 1 and callable(args[0]) and not kws:
        return args[0]
    return lambda fn: fn
