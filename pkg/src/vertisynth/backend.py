"""Kernel backend selection.

The compiled extension is preferred; the numpy fallback is used when the
extension is not built or when ``VERTISYNTH_BACKEND=python`` is set.
"""

import os

if os.environ.get("VERTISYNTH_BACKEND", "").lower() == "python":
    from vertisynth import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from vertisynth import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on build environment
        from vertisynth import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
