"""Numba @njit implementations of the hot array kernels.

Scalar-loop twins of `_kernels_numpy`; same functions, same contracts.
Compiled lazily on first call (cache=True persists the machine code in
__pycache__), so importing this module is cheap even without warm cache.
"""

import cmath
import math

import numba as nb
import numpy as np

_PI = math.pi
_ROT45 = cmath.exp(0.25j * _PI)


@nb.njit(cache=True)
def _sech_scalar(z):
    if z.real < 0.0:
        z = -z
    e = cmath.exp(-z)
    return 2.0 * e / (1.0 + e * e)


@nb.njit(cache=True)
def sech_batch(z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        out[i] = _sech_scalar(z[i])
    return out


@nb.njit(cache=True)
def eta3_batch(x, tol=1e-17):
    out = np.zeros(x.shape[0], dtype=np.float64)
    for i in range(x.shape[0]):
        xi = x[i]
        if xi < 1e-4:
            continue
        acc = 0.0
        sign = 1.0
        for n in range(1, 4002, 2):
            w = n * math.exp(-(n * n) * xi)
            acc += sign * w
            sign = -sign
            if w < tol:
                break
        out[i] = acc
    return out


@nb.njit(cache=True)
def _glaisher_scalar(b, z):
    sp = cmath.sqrt(b * b + 1j * z)
    sm = cmath.sqrt(b * b - 1j * z)
    return 0.5 * (_sech_scalar(0.5 * _PI * sp) + _sech_scalar(0.5 * _PI * sm))


@nb.njit(cache=True)
def glaisher_batch(b, z):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        out[i] = _glaisher_scalar(b, z[i])
    return out


@nb.njit(cache=True)
def thm21_factor(z, a, b):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        zi = z[i]
        out[i] = cmath.cos(a * zi) * _glaisher_scalar(b, zi)
    return out


@nb.njit(cache=True)
def _cpow(z, v):
    if z == 0.0:
        if v == 0.0:
            return 1.0 + 0.0j
        return 0.0 + 0.0j
    return cmath.exp(v * cmath.log(z))


@nb.njit(cache=True)
def thm31_factor(z, v, x):
    out = np.empty(z.shape[0], dtype=np.complex128)
    for i in range(z.shape[0]):
        zi = z[i]
        if v == 0.0:
            zp = 1.0 + 0.0j
        else:
            zp = _cpow(zi, v)
        out[i] = zp * _sech_scalar(zi) * cmath.cos(x * zi)
    return out


@nb.njit(cache=True)
def wsector_integrand(u, v, x, tau):
    out = np.empty(u.shape[0], dtype=np.complex128)
    for i in range(u.shape[0]):
        r = _ROT45 * u[i]
        if v == 0.0:
            rp = 1.0 + 0.0j
        else:
            rp = _cpow(r, v)
        out[i] = rp / cmath.cos(r) * cmath.exp(-x * r - tau * u[i] * u[i])
    return out


@nb.njit(cache=True)
def _phi2_scalar(a1, a2):
    m1 = abs(a1.real)
    m2 = abs(a2.real)
    ap = a1 + a2
    am = a1 - a2
    mp = abs(ap.real)
    mm = abs(am.real)
    c1 = 0.5 * (cmath.exp(a1 - m1) + cmath.exp(-a1 - m1))
    c2 = 0.5 * (cmath.exp(a2 - m2) + cmath.exp(-a2 - m2))
    cp = 0.5 * (cmath.exp(ap - mp) + cmath.exp(-ap - mp))
    cm = 0.5 * (cmath.exp(am - mm) + cmath.exp(-am - mm))
    return 0.5 * (c1 * c2) / (cp * cm) * math.exp(m1 + m2 - mp - mm)


@nb.njit(cache=True)
def phi2_batch(z1, z2, beta):
    s = _PI / (2.0 * beta)
    a2 = s * z2
    out = np.empty(z1.shape[0], dtype=np.complex128)
    for i in range(z1.shape[0]):
        out[i] = _phi2_scalar(s * z1[i], a2)
    return out
