"""Kernel backend selection.

The compiled backend is preferred when importable; set ``FDEPTH_KERNEL=py``
or ``FDEPTH_KERNEL=cy`` to force one (useful for benchmarks and debugging).
Polynomial handles are backend-specific and must not cross backends.
"""

import os

_forced = os.environ.get("FDEPTH_KERNEL", "").strip().lower()

if _forced in ("py", "python", "pure"):
    from . import _kernel_py as impl
elif _forced in ("cy", "c", "cython", "speedups"):
    from . import _speedups as impl  # noqa: F401  (ImportError is the answer)
else:
    try:
        from . import _speedups as impl
    except ImportError:
        from . import _kernel_py as impl

BACKEND = impl.BACKEND_NAME
