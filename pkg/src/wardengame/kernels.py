"""Kernel selection: compiled extension when built, pure Python otherwise.

Set WARDENGAME_PURE=1 to force the fallback (the benchmark uses this to
compare both paths; tests use it to check they agree).
"""

from __future__ import annotations

import os

if os.environ.get("WARDENGAME_PURE"):
    from wardengame._dense_py import solve_dense

    BACKEND = "python"
else:
    try:
        from wardengame._dense import solve_dense  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from wardengame._dense_py import solve_dense  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["solve_dense", "BACKEND"]
