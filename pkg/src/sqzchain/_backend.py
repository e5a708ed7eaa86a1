"""Kernel backend selection.

The compiled extension is preferred; the numpy fallback is used when the
extension is missing or when the environment variable ``SQZCHAIN_PURE_PYTHON``
is set to a non-empty value.
"""

import os

if os.environ.get("SQZCHAIN_PURE_PYTHON"):
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"


def backend_name():
    """Name of the active kernel backend ('compiled' or 'python')."""
    return BACKEND
