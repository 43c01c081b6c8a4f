"""Kernel backend selection.

The compiled extension is used when importable.  ``KCLIQUE_BACKEND=python``
forces the pure-Python kernels; ``KCLIQUE_BACKEND=compiled`` makes a missing
extension an import error instead of a silent fallback.
"""
import os

from . import _pycore

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_choice = os.environ.get("KCLIQUE_BACKEND", "").strip().lower()
if _choice == "compiled" and _ckernels is None:
    raise ImportError("KCLIQUE_BACKEND=compiled but kclique._ckernels is not built")

if _choice == "python" or _ckernels is None:
    kernels = _pycore
else:
    kernels = _ckernels

COMPILED_AVAILABLE = _ckernels is not None


def get(name=None):
    """Return the kernel module for ``name`` ('compiled', 'python' or None)."""
    if name is None:
        return kernels
    if name == "python":
        return _pycore
    if name == "compiled":
        if _ckernels is None:
            raise ImportError("compiled kernels are not available")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
