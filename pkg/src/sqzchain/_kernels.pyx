# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: spectrum evaluation, phase-to-variance mapping and
windowed variance estimation.

The pure-python module ``_kernels_py`` implements the same signatures with
numpy; ``_backend`` picks whichever is importable.  Both backends agree to
floating-point roundoff (the compiled reductions are sequential, numpy's are
pairwise, so the last ulp may differ).
"""

import numpy as np

from libc.math cimport cos, sin


def spectrum_pair(f_hz, double eta, double gamma_hz, double kappa_hz, double pump_ratio):
    """Squeezed / anti-squeezed variance (relative to shot noise) at each
    sideband frequency.

    All cavity widths are HWHM in ordinary-frequency Hz; the underlying
    angular-frequency expression is homogeneous, so the 2*pi factors cancel.
    """
    f = np.ascontiguousarray(f_hz, dtype=np.float64)
    out_m = np.empty_like(f)
    out_p = np.empty_like(f)
    cdef double[::1] fv = f
    cdef double[::1] mv = out_m
    cdef double[::1] pv = out_p
    cdef Py_ssize_t i, n = fv.shape[0]
    cdef double e = pump_ratio * gamma_hz
    cdef double k2 = kappa_hz * kappa_hz
    cdef double dm = (gamma_hz + e) * (gamma_hz + e)
    cdef double dp = (gamma_hz - e) * (gamma_hz - e)
    cdef double num = 4.0 * gamma_hz * e
    cdef double f2, filt
    with nogil:
        for i in range(n):
            f2 = fv[i] * fv[i]
            filt = eta * k2 / (k2 + f2)
            mv[i] = 1.0 - filt * num / (dm + f2)
            pv[i] = 1.0 + filt * num / (dp + f2)
    return out_m, out_p


def phase_variance(theta, double s_minus, double s_plus):
    """Quadrature variance at each readout phase (0 = squeezed quadrature)."""
    th = np.ascontiguousarray(theta, dtype=np.float64)
    out = np.empty_like(th)
    cdef double[::1] tv = th
    cdef double[::1] ov = out
    cdef Py_ssize_t i, n = tv.shape[0]
    cdef double c, s
    with nogil:
        for i in range(n):
            c = cos(tv[i])
            s = sin(tv[i])
            ov[i] = s_minus * c * c + s_plus * s * s
    return out


def windowed_variance(x, Py_ssize_t window):
    """Unbiased sample variance over consecutive non-overlapping windows.

    Trailing samples that do not fill a window are dropped.
    """
    xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t n = xa.shape[0]
    cdef Py_ssize_t nwin = n // window
    out = np.empty(nwin, dtype=np.float64)
    cdef double[::1] xv = xa
    cdef double[::1] ov = out
    cdef Py_ssize_t w, i, base
    cdef double mean, acc, d
    with nogil:
        for w in range(nwin):
            base = w * window
            acc = 0.0
            for i in range(window):
                acc += xv[base + i]
            mean = acc / window
            acc = 0.0
            for i in range(window):
                d = xv[base + i] - mean
                acc += d * d
            ov[w] = acc / (window - 1)
    return out
