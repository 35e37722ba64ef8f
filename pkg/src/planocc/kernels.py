"""Backend selection for the combinatorial-map kernels.

The compiled extension ``planocc._kernels`` is used when it imports; the
pure-Python twin ``planocc._kernels_py`` is the fallback.  Setting the
environment variable ``PLANOCC_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("PLANOCC_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

MODE_PATTERN = _impl.MODE_PATTERN
MODE_SUBMAP = _impl.MODE_SUBMAP
MODE_AT_ROOT = _impl.MODE_AT_ROOT

orbit_labels = _impl.orbit_labels
face_labels = _impl.face_labels
is_connected = _impl.is_connected
canonical_code = _impl.canonical_code
all_root_codes = _impl.all_root_codes
scan_occurrences = _impl.scan_occurrences

__all__ = [
    "BACKEND",
    "MODE_PATTERN",
    "MODE_SUBMAP",
    "MODE_AT_ROOT",
    "orbit_labels",
    "face_labels",
    "is_connected",
    "canonical_code",
    "all_root_codes",
    "scan_occurrences",
]
