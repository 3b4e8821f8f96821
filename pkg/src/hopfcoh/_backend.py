"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it was built; otherwise the
numpy fallback in ``_pykernels``. Setting ``HOPFCOH_PURE_PYTHON=1`` forces the
fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

python_kernels = _pykernels

try:
    from . import _kernels as compiled_kernels
except ImportError:  # extension not built
    compiled_kernels = None

if compiled_kernels is not None and os.environ.get("HOPFCOH_PURE_PYTHON", "") != "1":
    kernels = compiled_kernels
    BACKEND = "cython"
else:
    kernels = _pykernels
    BACKEND = "python"


def available_backends():
    names = {"python": _pykernels}
    if compiled_kernels is not None:
        names["cython"] = compiled_kernels
    return names
