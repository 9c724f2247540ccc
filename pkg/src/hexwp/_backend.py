"""Kernel backend selection.

The compiled extension is preferred when importable; otherwise the
pure-Python kernels take over with identical signatures. HEXWP_BACKEND
(values: compiled, python) forces a choice for benchmarking and for running
the test suite against the fallback; it never changes semantics, only which
implementation of the same contract runs.
"""

from __future__ import annotations

import os

_requested = os.environ.get("HEXWP_BACKEND", "auto").strip().lower()

if _requested in ("auto", "", "compiled", "c"):
    try:
        from . import _kernels_c as kernels  # type: ignore[attr-defined]
    except ImportError:
        if _requested in ("compiled", "c"):
            raise ImportError(
                "HEXWP_BACKEND requested the compiled backend but the "
                "extension is not built; reinstall with a C compiler available"
            ) from None
        from . import _kernels_py as kernels
elif _requested in ("python", "py", "pure"):
    from . import _kernels_py as kernels
else:
    raise ImportError(f"unrecognized HEXWP_BACKEND value: {_requested!r}")

BACKEND: str = kernels.BACKEND_NAME

__all__ = ["kernels", "BACKEND"]
