"""Backend selection for the subset-scan kernels.

The compiled module is used when it was built; set ``TYPEA_PURE_PYTHON=1``
to force the pure-Python implementation.
"""

import os

from . import _kernels_py

if os.environ.get("TYPEA_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

maximal_independent_masks = _impl.maximal_independent_masks
exact_one_masks = _impl.exact_one_masks

# largest universe each backend is allowed to scan exhaustively
MAX_SCAN_BITS = 26 if BACKEND == "cython" else 22
