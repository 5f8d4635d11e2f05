"""Kernel selection: compiled extension when usable, pure Python otherwise.

The compiled kernels assume C int64 arithmetic and, for the oracle, a flag
array of one byte per candidate |T|.  Each call is routed to the compiled
module only when the exact worst-case bound on |T| fits both constraints;
otherwise the arbitrary-precision Python kernels take over.  Setting the
environment variable REPVOL_PURE_PYTHON (to any nonempty value) before
import forces the pure Python kernels unconditionally.
"""

import os

from . import _kernels_py

try:
    from . import _speedups
except ImportError:
    _speedups = None

if os.environ.get("REPVOL_PURE_PYTHON"):
    _speedups = None

ACTIVE = "compiled" if _speedups is not None else "pure-python"

_INT64_LIMIT = 1 << 62
_FLAG_ARRAY_LIMIT = 1 << 25


def _max_abs_t(L, s, g, span):
    # largest |T| = |sum n_i w_i - n L| reachable by either kernel
    return L * (2 * span * s + 2 * g - 2)


def enumerate_classes(a, w, L, g):
    if _speedups is not None and a and _max_abs_t(L, len(a), g, 1) < _INT64_LIMIT:
        return _speedups.enumerate_classes(tuple(a), tuple(w), L, g)
    return _kernels_py.enumerate_classes(tuple(a), tuple(w), L, g)


def brute_force_classes(a, w, L, g, span):
    bound = _max_abs_t(L, len(a), g, span)
    if (_speedups is not None and a and bound < _INT64_LIMIT
            and bound <= _FLAG_ARRAY_LIMIT):
        return _speedups.brute_force_classes(tuple(a), tuple(w), L, g, span)
    return _kernels_py.brute_force_classes(tuple(a), tuple(w), L, g, span)
