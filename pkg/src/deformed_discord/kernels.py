"""Backend selection for the measurement kernels.

The compiled ``_ckernels`` extension is used when it was built; otherwise
the pure-Python ``_pykernels`` module takes over.  Setting
``DEFORMED_DISCORD_BACKEND=python`` forces the fallback.
"""
import os

import numpy as np

from . import _pykernels

_forced = os.environ.get("DEFORMED_DISCORD_BACKEND", "").lower()

if _forced == "python":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        if _forced == "cython":
            raise
        _impl = _pykernels
        BACKEND = "python"


def get_backend(name=None):
    """Return the kernel module called ``name`` ("cython" or "python"), or the active one."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


def split_matrix(rho, backend=None):
    """Flatten a 4x4 matrix into the (real, imag) pair the kernels expect."""
    m = np.asarray(rho, dtype=complex).reshape(16)
    rr = np.ascontiguousarray(m.real)
    ri = np.ascontiguousarray(m.imag)
    if (backend or _impl) is _pykernels:
        return rr.tolist(), ri.tolist()
    return rr, ri


def conditional_entropy(rr, ri, theta, phi):
    return _impl.conditional_entropy(rr, ri, theta, phi)


def grid_search(rr, ri, n_theta, n_phi):
    return _impl.grid_search(rr, ri, n_theta, n_phi)


def refine(rr, ri, theta, phi, step, tol, max_evals):
    return _impl.refine(rr, ri, theta, phi, step, tol, max_evals)
