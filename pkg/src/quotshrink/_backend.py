"""Select the kernel implementation at import time.

The compiled extension is preferred; set ``QUOTSHRINK_PURE=1`` to force the
pure-Python fallback (the benchmark and the backend parity tests do this).
"""

import os

NAME = "python"

if os.environ.get("QUOTSHRINK_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        NAME = "cython"
    except ImportError:  # pragma: no cover - depends on build
        from . import _kernels_py as kernels
else:
    from . import _kernels_py as kernels

from . import _kernels_py as pure_kernels  # noqa: E402

__all__ = ["kernels", "pure_kernels", "NAME"]
