"""Kernel selection: the compiled extension when it imports, else pure Python.

Set ``HANOIFIB_PURE_PYTHON=1`` to force the fallback (used by the test suite
and the benchmark to exercise both paths).
"""
from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("HANOIFIB_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND: str = _impl.BACKEND
successors = _impl.successors
build_csr = _impl.build_csr
bfs = _impl.bfs
scc_labels = _impl.scc_labels

python_backend = _kernels_py


def compiled_backend():
    """The compiled module, or ``None`` when it was not built."""
    try:
        from . import _kernels
    except ImportError:
        return None
    return _kernels
