"""Face-tracing kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module with the same functions is.  ``STRONGEMBED_PURE_PYTHON=1`` forces
the fallback.
"""

import os

from . import _faces_py

if os.environ.get("STRONGEMBED_PURE_PYTHON", "") not in ("", "0"):
    _impl = _faces_py
    BACKEND = "python"
else:
    try:
        from . import _faces as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _faces_py
        BACKEND = "python"

face_stats = _impl.face_stats
scan_masks = _impl.scan_masks

__all__ = ["BACKEND", "face_stats", "scan_masks", "_faces_py"]
