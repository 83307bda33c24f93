"""Kernel backend selection.

The numba backend is used when importable; set TSRCOLOR_NO_NUMBA=1 to force
the pure-numpy fallback (read once at import). Both backends expose the same
functions with identical semantics; `benchmarks/compare_backends.py` times
them side by side.

The fused `color_pass` exists only in the numba backend. Without it the
colouring module runs its own step-by-step Python path, so everything works
either way.
"""

from __future__ import annotations

import os

DISABLE_ENV = "TSRCOLOR_NO_NUMBA"


def numba_disabled() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip() not in ("", "0")


_impl = None
if not numba_disabled():
    try:
        from . import _kernels_numba as _impl
    except ImportError:
        _impl = None

if _impl is not None:
    USING_NUMBA = True
    color_pass = _impl.color_pass
else:
    from . import _kernels_numpy as _impl
    USING_NUMBA = False
    color_pass = None

BACKEND = "numba" if USING_NUMBA else "numpy"

truncated_bfs = _impl.truncated_bfs
rneigh_csr = _impl.rneigh_csr
backward_counts = _impl.backward_counts
backward_big_counts = _impl.backward_big_counts
verify_conflicts = _impl.verify_conflicts
