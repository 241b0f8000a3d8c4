"""Pure-numpy implementations of the hot array kernels.

These are the vectorized twins of the @njit loops in `_kernels_numba`.
Both modules expose the same functions with the same contracts; tests
cross-check them pointwise. Keep the math here boring and allocation-light:
these run inside adaptive quadrature and get called with ~1e4..1e6 points.

Conventions
-----------
* complex powers / square roots are numpy principal branch
* sech is evaluated as 2 e^{-z} / (1 + e^{-2z}) after reflecting to
  Re z >= 0, so it never overflows and underflows cleanly to 0
* the cosh-ratio kernels are rescaled by their dominant exponential before
  dividing; the residual exponent is provably <= 0, so no overflow either
"""

import numpy as np

_PI = np.pi


def sech_batch(z):
    """sech(z) for a complex array, overflow-free."""
    z = np.asarray(z, dtype=np.complex128)
    zf = np.where(z.real < 0.0, -z, z)
    e = np.exp(-zf)
    return 2.0 * e / (1.0 + e * e)


def eta3_batch(x, tol=1e-17):
    """sum over odd n of chi4(n) * n * exp(-n^2 x) for x >= 0 (array).

    For x < 1e-4 the true value is below exp(-pi^2/(16e-4)) ~ 1e-2679
    (the series is a theta cusp form; it vanishes to all orders at 0),
    so we return 0.0 there instead of summing ~1e4 near-cancelling terms.
    """
    x = np.asarray(x, dtype=np.float64)
    out = np.zeros_like(x)
    live = x >= 1e-4
    if not np.any(live):
        return out
    xl = x[live]
    acc = np.zeros_like(xl)
    sign = 1.0
    for n in range(1, 4002, 2):
        t = (sign * n) * np.exp(-(n * n) * xl)
        acc += t
        sign = -sign
        if n * np.exp(-(n * n) * np.min(xl)) < tol:
            break
    out[live] = acc
    return out


def glaisher_batch(b, z):
    """Glaisher-type wave-packet kernel, continued to complex z.

    For real z this equals cosh(pi A/2) cos(pi B/2) /
    (cosh^2(pi A/2) - sin^2(pi B/2)) with A + iB = sqrt(b^2 + iz) (the exact
    split 2A^2 = sqrt(b^4+z^2) + b^2, 2B^2 = sqrt(b^4+z^2) - b^2);
    algebraically the ratio collapses to

        1/2 [ sech(pi s+ / 2) + sech(pi s- / 2) ],   s± = sqrt(b^2 ± i z),

    which is the form evaluated here: it is overflow-free and is the correct
    analytic continuation off the real axis. Poles lie on the imaginary axis
    at z = ±i(b^2 + n^2), n odd.
    """
    z = np.asarray(z, dtype=np.complex128)
    sp = np.sqrt(b * b + 1j * z)
    sm = np.sqrt(b * b - 1j * z)
    return 0.5 * (sech_batch(0.5 * _PI * sp) + sech_batch(0.5 * _PI * sm))


def thm21_factor(z, a, b):
    """cos(a z) * glaisher kernel, the analytic factor of the packet integral."""
    z = np.asarray(z, dtype=np.complex128)
    return np.cos(a * z) * glaisher_batch(b, z)


def thm31_factor(z, v, x):
    """z^v sech(z) cos(x z), principal branch of z^v."""
    z = np.asarray(z, dtype=np.complex128)
    if v == 0:
        zp = np.ones_like(z)
    else:
        zp = np.where(z == 0, 0.0 + 0.0j, z ** v)
    return zp * sech_batch(z) * np.cos(x * z)


def wsector_integrand(u, v, x, tau):
    """Integrand of the 45-degree-sector correction term.

    r = e^{i pi/4} u,  value = r^v sec(r) e^{-x r} e^{-tau u^2}.
    |cos r|^2 = cosh^2(u/sqrt2) - sin^2(u/sqrt2) >= sinh^2(u/sqrt2) > 0 for
    u > 0 and equals 1 at u = 0, so the ray is pole-free.
    """
    u = np.asarray(u, dtype=np.float64)
    r = np.exp(0.25j * _PI) * u
    if v == 0:
        rp = np.ones_like(r)
    else:
        rp = np.where(r == 0, 0.0 + 0.0j, r ** v)
    return rp / np.cos(r) * np.exp(-x * r - tau * u * u)


def phi2_batch(z1, z2, beta):
    """Two-particle cosh-ratio kernel, z1 array x z2 scalar.

    phi = cosh(a1) cosh(a2) / (cosh(2 a1) + cosh(2 a2)),  a_j = pi z_j/(2 beta)
        = cosh(a1) cosh(a2) / (2 cosh(a1+a2) cosh(a1-a2)).

    Rescaled by exp(m1 + m2 - mp - mm) with m* = |Re .|; that exponent is
    <= 0 for every sign pattern, so the expression cannot overflow.
    """
    a1 = (_PI / (2.0 * beta)) * np.asarray(z1, dtype=np.complex128)
    a2 = (_PI / (2.0 * beta)) * complex(z2)
    m1 = np.abs(a1.real)
    m2 = abs(a2.real)
    ap = a1 + a2
    am = a1 - a2
    mp = np.abs(ap.real)
    mm = np.abs(am.real)
    c1 = 0.5 * (np.exp(a1 - m1) + np.exp(-a1 - m1))
    c2 = 0.5 * (np.exp(a2 - m2) + np.exp(-a2 - m2))
    cp = 0.5 * (np.exp(ap - mp) + np.exp(-ap - mp))
    cm = 0.5 * (np.exp(am - mm) + np.exp(-am - mm))
    return 0.5 * (c1 * c2) / (cp * cm) * np.exp(m1 + m2 - mp - mm)
