"""Backend selection for the traversal kernels.

``PCLIST_DISABLE_NUMBA=1`` (or a missing numba install) selects the
interpreted path; both paths run the source in ``_kernels``.
"""

from __future__ import annotations

import importlib.util
import os
import sys
from functools import lru_cache

from . import _kernels

KERNELS = ("_init_u", "_u_remove", "_scan_vertex", "_e_remove",
           "bfs_kernel", "components_kernel", "dfs_kernel")


def _numba_available() -> bool:
    return importlib.util.find_spec("numba") is not None


def default_backend() -> str:
    flag = os.environ.get("PCLIST_DISABLE_NUMBA", "").strip().lower()
    if flag in ("1", "true", "yes", "on") or not _numba_available():
        return "python"
    return "numba"


@lru_cache(maxsize=None)
def _numba_module():
    import numba

    spec = importlib.util.spec_from_file_location("pclist._kernels_jit", _kernels.__file__)
    mod = importlib.util.module_from_spec(spec)
    # numba's on-disk cache re-imports the defining module by name
    sys.modules[spec.name] = mod
    spec.loader.exec_module(mod)
    # helpers must be jitted before the kernels that call them are compiled
    for name in KERNELS:
        setattr(mod, name, numba.njit(cache=True)(getattr(mod, name)))
    return mod


def kernels(backend: str | None = None):
    """Module-like namespace exposing the kernels for ``backend``."""
    backend = backend or default_backend()
    if backend == "python":
        return _kernels
    if backend == "numba":
        return _numba_module()
    raise ValueError(f"unknown backend {backend!r}")
