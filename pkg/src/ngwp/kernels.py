"""Dispatching wrappers around the backend array kernels.

Normalizes dtypes/shapes so callers can pass scalars, lists, or arrays and
the selected backend (numpy vectorized or numba loops) sees contiguous 1-d
arrays of the exact dtype it expects.
"""

import numpy as np

from . import backends


def _c1d(z):
    return np.ascontiguousarray(np.asarray(z, dtype=np.complex128).ravel())


def _f1d(x):
    return np.ascontiguousarray(np.asarray(x, dtype=np.float64).ravel())


def _restore(out, like, scalar):
    if scalar:
        return out[0]
    return out.reshape(np.shape(like))


def eta3(x, tol=1e-17):
    scalar = np.isscalar(x)
    out = backends.active().eta3_batch(_f1d(x), tol)
    return _restore(out, x, scalar)


def sech(z):
    scalar = np.isscalar(z)
    out = backends.active().sech_batch(_c1d(z))
    return _restore(out, z, scalar)


def glaisher(b, z):
    scalar = np.isscalar(z)
    out = backends.active().glaisher_batch(float(b), _c1d(z))
    return _restore(out, z, scalar)


def thm21_factor(z, a, b):
    scalar = np.isscalar(z)
    out = backends.active().thm21_factor(_c1d(z), float(a), float(b))
    return _restore(out, z, scalar)


def thm31_factor(z, v, x):
    scalar = np.isscalar(z)
    out = backends.active().thm31_factor(_c1d(z), complex(v), float(x))
    return _restore(out, z, scalar)


def wsector_integrand(u, v, x, tau):
    scalar = np.isscalar(u)
    out = backends.active().wsector_integrand(
        _f1d(u), complex(v), float(x), float(tau))
    return _restore(out, u, scalar)


def phi2(z1, z2, beta):
    scalar = np.isscalar(z1)
    out = backends.active().phi2_batch(_c1d(z1), complex(z2), float(beta))
    return _restore(out, z1, scalar)
