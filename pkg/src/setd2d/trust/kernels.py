"""Kernel backend selection.

The compiled kernel is preferred when the extension built; set
SETD2D_PURE_PYTHON=1 to force the pure-Python fallback (used by tests and
the kernel benchmark).
"""
import os

if os.environ.get("SETD2D_PURE_PYTHON"):
    from . import _histcore_py as _backend
else:
    try:
        from . import _histcore_c as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _histcore_py as _backend

BACKEND_NAME = "compiled" if _backend.__name__.endswith("_c") else "python"

decay_weight = _backend.decay_weight
windowed_opinion = _backend.windowed_opinion
opinion_stats = _backend.opinion_stats
sort_integrity = _backend.sort_integrity
