"""Kernel backend selection, done once at import.

The compiled extension is preferred when present; setting the environment
variable ``BERNKIT_PURE=1`` before import forces the pure-Python kernels
(useful for benchmarking and debugging).
"""

import os

_force_pure = os.environ.get("BERNKIT_PURE", "") not in ("", "0")

if _force_pure:
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]

        BACKEND = "c"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

conv1 = _impl.conv1
conv2 = _impl.conv2
simpson_exp_monomial = _impl.simpson_exp_monomial


def backend_name() -> str:
    """Which kernel implementation is active: ``"c"`` or ``"python"``."""
    return BACKEND
