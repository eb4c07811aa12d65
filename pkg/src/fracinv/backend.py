"""Backend selection for the series-evaluation kernels.

The compiled extension is preferred when importable; the pure numpy
implementation is the fallback.  Set ``FRACINV_BACKEND=pure`` or
``compiled`` to force a choice (``auto`` is the default).
"""

from __future__ import annotations

import os

from . import _kernels_py


def _load(name: str):
    if name == "pure":
        return _kernels_py
    if name == "compiled":
        from . import _mlkern  # raises ImportError when not built
        return _mlkern
    try:
        from . import _mlkern
        return _mlkern
    except ImportError:
        return _kernels_py


_choice = os.environ.get("FRACINV_BACKEND", "auto").lower()
if _choice not in ("auto", "pure", "compiled"):
    raise ValueError(f"FRACINV_BACKEND must be auto|pure|compiled, got {_choice!r}")

_impl = _load(_choice)

BACKEND_NAME: str = _impl.BACKEND_NAME
series_eval = _impl.series_eval


def get_backend(name: str):
    """Return a specific kernel module (used by tests and benchmarks)."""
    return _load(name)
