"""Kernel backend selection.

Prefers the compiled module ``heisaut._speedups`` when it has been
built, otherwise uses the pure-Python twin ``heisaut._kernels``.  Set
``HEISAUT_PURE=1`` in the environment to force the pure kernels (the
backend-parity tests and the benchmark use this).
"""

import os

if os.environ.get("HEISAUT_PURE", "") not in ("", "0"):
    from . import _kernels as kernels
else:
    try:
        from . import _speedups as kernels  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels as kernels  # type: ignore[no-redef]


def backend_name() -> str:
    """Name of the active kernel backend: 'compiled' or 'pure'."""
    return "compiled" if kernels.__name__.endswith("_speedups") else "pure"
