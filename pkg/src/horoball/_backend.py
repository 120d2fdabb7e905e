"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
kernels are a drop-in replacement producing bit-identical results. Set
HOROBALL_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the backend-equivalence tests).
"""

import os

if os.environ.get("HOROBALL_PURE_PYTHON"):
    from . import _kernels as kernels

    COMPILED = False
else:
    try:
        from . import _speedups as kernels  # type: ignore[no-redef]

        COMPILED = True
    except ImportError:
        from . import _kernels as kernels  # type: ignore[no-redef]

        COMPILED = False
