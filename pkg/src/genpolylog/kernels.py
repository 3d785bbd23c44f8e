"""Backend selection for the dense F_p polynomial kernels.

The compiled extension is used when it was built and importable; setting
``POLYLOG_PURE_PYTHON=1`` forces the pure-Python fallback.  Both backends
agree on every input (see tests/test_kernels.py).
"""

import os

from . import _kernels_py

# The compiled kernels use 64-bit accumulators and assume p < 2**31.
COMPILED_MAX_PRIME = 2**31 - 1

_compiled = None
if os.environ.get("POLYLOG_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

_impl = _compiled if _compiled is not None else _kernels_py

BACKEND = _impl.BACKEND
inverse = _impl.inverse
add = _impl.add
sub = _impl.sub
scale = _impl.scale
mul = _impl.mul
divmod_ = _impl.divmod_
gcd = _impl.gcd
evaluate = _impl.evaluate


def available_backends():
    """Return the kernel modules importable in this interpreter, by name."""
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def exact_div(a, b, p):
    """Quotient of a by b, or None when b does not divide a."""
    q, r = divmod_(a, b, p)
    return None if r else q
