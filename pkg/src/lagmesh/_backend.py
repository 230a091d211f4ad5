"""Kernel backend selection.

The hot inner loops in :mod:`lagmesh.kernels` exist in two implementations:
numba ``@njit`` loops and vectorized pure numpy.  The environment variable
``LAGMESH_BACKEND`` picks one:

* unset or ``auto`` -- numba when importable, numpy otherwise;
* ``numba``         -- require numba, fail loudly if it is missing;
* ``numpy``         -- force the pure-numpy path (useful for debugging and
  for the benchmark baseline).

``benchmarks/bench_kernels.py`` times the two paths against each other.
"""

from __future__ import annotations

import os

_ENV_VAR = "LAGMESH_BACKEND"
_requested = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"{_ENV_VAR} must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

try:
    from numba import njit as _njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAS_NUMBA = False
    _njit = None
    if _requested == "numba":
        raise

USE_NUMBA = HAS_NUMBA and _requested != "numpy"
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(func):
    """Apply ``@njit(cache=True)`` when numba is available, else no-op."""
    if HAS_NUMBA:
        return _njit(cache=True)(func)
    return func
