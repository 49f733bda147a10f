"""Hot loops over finite-field codes, with a selectable backend.

``PICARD_LAB_KERNELS=numba`` (default when numba imports) uses the compiled
kernels; ``PICARD_LAB_KERNELS=numpy`` forces the vectorized numpy fallback.
Both backends return identical arrays.
"""
import logging
import os

import numpy as np

from . import _numpy as numpy_impl

log = logging.getLogger(__name__)

try:
    from . import _numba as numba_impl
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_impl = None

_requested = os.environ.get("PICARD_LAB_KERNELS", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(f"PICARD_LAB_KERNELS must be 'numba' or 'numpy', got {_requested!r}")
if _requested == "numba" and numba_impl is None:  # pragma: no cover
    log.warning("numba unavailable; using numpy kernels")
    _requested = "numpy"

BACKEND = _requested
_impl = numba_impl if BACKEND == "numba" else numpy_impl

series_mul = _impl.series_mul
series_compose = _impl.series_compose
series_inverse = _impl.series_inverse
row_space_rref = _impl.row_space_rref
eval_monomials = _impl.eval_monomials



def _frozen(x) -> np.ndarray:
    arr = np.array(x, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def warmup() -> None:
    """Run every kernel once so JIT compilation happens up front.

    Argument layouts match the library's own calls: field tables and series
    coefficients are read-only, work matrices are writable.
    """
    add = _frozen([[0, 1], [1, 0]])
    mul = _frozen([[0, 0], [0, 1]])
    neg = _frozen([0, 1])
    inv = _frozen([0, 1])
    a = _frozen([1, 1])
    g = _frozen([0, 1])
    series_mul(a, a, add, mul)
    series_compose(a, g, add, mul)
    series_inverse(a, add, mul, neg, inv)
    row_space_rref(np.array([[1, 1]], dtype=np.int64), add, mul, neg, inv)
    power = np.array([[1, 0], [1, 1]], dtype=np.int64)
    eval_monomials(np.ones((1, 1), dtype=np.int64), np.ones(1, dtype=np.int64), np.ones((1, 1), dtype=np.int64), add, mul, power)


__all__ = [
    "BACKEND",
    "warmup",
    "numpy_impl",
    "numba_impl",
    "series_mul",
    "series_compose",
    "series_inverse",
    "row_space_rref",
    "eval_monomials",
]
