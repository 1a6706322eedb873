"""Kernel backend selection.

The compiled extension is used when importable; otherwise the pure Python
kernels take over.  Setting CYCLORBIT_PURE=1 forces pure Python regardless.
Call through this module (``_backend.kmp_search_count(...)``) rather than
binding the functions at import, so tests can swap backends per call.
"""

import os

from . import _purekernels


def _pick():
    if os.environ.get("CYCLORBIT_PURE", "") not in ("", "0"):
        return _purekernels, "pure"
    try:
        from . import _speedups
    except ImportError:
        return _purekernels, "pure"
    return _speedups, "compiled"


_impl, BACKEND = _pick()

kmp_search_count = _impl.kmp_search_count
orbit_scan = _impl.orbit_scan
cycles_of_mapping = _impl.cycles_of_mapping


def available_backends():
    """Name -> kernel module, for every backend importable here."""
    found = {"pure": _purekernels}
    try:
        from . import _speedups
    except ImportError:
        pass
    else:
        found["compiled"] = _speedups
    return found
