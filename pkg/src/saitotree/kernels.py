"""Backend selection for the brute-force enumeration kernel.

The compiled Cython module is used when it was built; otherwise the numpy
implementation is.  Setting ``SAITOTREE_PURE=1`` forces the fallback.
"""
import os

from . import _kernels_py

try:
    if os.environ.get("SAITOTREE_PURE"):
        raise ImportError("pure backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "numpy"


def enumerate_admissible(par0, par1, nbr_ptr, nbr_idx, nu, n, backend=None):
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernel is not available")
        import numpy as np
        arrs = [np.ascontiguousarray(a, dtype=np.int64)
                for a in (par0, par1, nbr_ptr, nbr_idx, nu, n)]
        return _ckernels.enumerate_admissible(*arrs)
    return _kernels_py.enumerate_admissible(par0, par1, nbr_ptr, nbr_idx, nu, n)
