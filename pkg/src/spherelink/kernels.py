"""Hot loops, compiled when the extension is available.

Set ``SPHERELINK_PURE=1`` to force the Python implementations.
"""

from __future__ import annotations

import os

if os.environ.get("SPHERELINK_PURE"):
    from ._kernels_py import face_classes, min_map_code, refine
    COMPILED = False
else:
    try:
        from ._kernels import face_classes, min_map_code, refine
        COMPILED = True
    except ImportError:
        from ._kernels_py import face_classes, min_map_code, refine
        COMPILED = False

__all__ = ["COMPILED", "face_classes", "min_map_code", "refine"]
