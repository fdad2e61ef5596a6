"""Backend selection for the hot kernels.

The compiled extension ``twofaced._kernels`` is used when it was built and
imports cleanly; otherwise the pure-Python twin ``twofaced._kernels_py`` is
used.  Setting ``TWOFACED_PURE_PYTHON=1`` forces the fallback, which is how
the test suite exercises both code paths.
"""

import os

_impl = None
if os.environ.get("TWOFACED_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = None
if _impl is None:
    from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
GaussianRational = _impl.GaussianRational
ZERO = _impl.ZERO
ONE = _impl.ONE
set_partition_rgs = _impl.set_partition_rgs
rgs_is_noncrossing = _impl.rgs_is_noncrossing
rgs_is_interval = _impl.rgs_is_interval
rgs_canonical = _impl.rgs_canonical
rgs_join = _impl.rgs_join
rgs_refines = _impl.rgs_refines
block_sum = _impl.block_sum


def scalar(value) -> "GaussianRational":
    """Coerce an int, Fraction or Gaussian rational of either backend."""
    if isinstance(value, GaussianRational):
        return value
    if hasattr(value, "to_parts"):
        return GaussianRational.from_parts(*value.to_parts())
    if isinstance(value, complex):
        raise TypeError("floating complex values are not exact; use GaussianRational")
    return GaussianRational(value)


__all__ = [
    "BACKEND", "GaussianRational", "ZERO", "ONE", "scalar",
    "set_partition_rgs", "rgs_is_noncrossing", "rgs_is_interval",
    "rgs_canonical", "rgs_join", "rgs_refines", "block_sum",
]
