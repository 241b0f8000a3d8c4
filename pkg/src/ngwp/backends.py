"""Backend selection for the hot numerical kernels.

The array kernels (character series, Glaisher-type kernel on rotated rays,
two-particle cosh-ratio kernel, rotated-ray integrand factors) exist twice:
once as plain vectorized numpy (`_kernels_numpy`) and once as numba @njit
scalar loops (`_kernels_numba`). Both implement the same math and the test
suite checks them against each other.

Selection is by the environment variable NGWP_BACKEND:

    auto   (default) use numba when importable, else numpy
    numba  require numba; ImportError if unavailable
    numpy  force the pure-numpy path

`set_backend()` overrides at runtime (used by tests and the benchmark).
"""

import os

from . import _kernels_numpy

_FORCED = None  # runtime override, wins over the env var


def _env_choice():
    return os.environ.get("NGWP_BACKEND", "auto").strip().lower()


def _load_numba_kernels():
    from . import _kernels_numba  # deferred: importing numba is not free
    return _kernels_numba


def active():
    """Return the kernel module currently in effect."""
    choice = _FORCED or _env_choice()
    if choice == "numpy":
        return _kernels_numpy
    if choice == "numba":
        return _load_numba_kernels()
    if choice != "auto":
        raise ValueError(
            "NGWP_BACKEND must be one of auto/numba/numpy, got %r" % choice)
    try:
        return _load_numba_kernels()
    except ImportError:
        return _kernels_numpy


def set_backend(name):
    """Force a backend ('numba' | 'numpy' | 'auto' | None to clear)."""
    global _FORCED
    if name is not None and name not in ("numba", "numpy", "auto"):
        raise ValueError("unknown backend %r" % name)
    _FORCED = name


def backend_name():
    mod = active()
    return "numba" if mod.__name__.endswith("_numba") else "numpy"
