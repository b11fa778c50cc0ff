"""Backend selection for the hot update kernels.

The compiled Cython backend is preferred; the pure-Python backend is
used when the extension is unavailable or when the environment variable
``SWARMLAB_PURE_PYTHON`` is set (useful for the backend-equivalence
tests and the benchmark script). Both backends are bit-identical.
"""

import os

from . import _python

if os.environ.get("SWARMLAB_PURE_PYTHON"):
    _backend = _python
else:
    try:
        from . import _ckernels as _backend
    except ImportError:
        _backend = _python

BACKEND_NAME = _backend.BACKEND_NAME

pso_update = _backend.pso_update
bat_candidates = _backend.bat_candidates
firefly_sweep = _backend.firefly_sweep
cuckoo_local = _backend.cuckoo_local
fpa_candidates = _backend.fpa_candidates

__all__ = [
    "BACKEND_NAME",
    "pso_update",
    "bat_candidates",
    "firefly_sweep",
    "cuckoo_local",
    "fpa_candidates",
]
