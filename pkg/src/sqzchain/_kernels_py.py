"""Pure-python (numpy) fallback for the compiled kernels in ``_kernels.pyx``.

Same signatures, same semantics; used when the extension is not built or when
``SQZCHAIN_PURE_PYTHON`` is set.
"""

import numpy as np


def spectrum_pair(f_hz, eta, gamma_hz, kappa_hz, pump_ratio):
    """Squeezed / anti-squeezed variance (relative to shot noise) at each
    sideband frequency.

    All cavity widths are HWHM in ordinary-frequency Hz; the underlying
    angular-frequency expression is homogeneous, so the 2*pi factors cancel.
    """
    f = np.asarray(f_hz, dtype=np.float64)
    e = pump_ratio * gamma_hz
    f2 = f * f
    filt = eta * kappa_hz**2 / (kappa_hz**2 + f2)
    num = 4.0 * gamma_hz * e
    s_minus = 1.0 - filt * num / ((gamma_hz + e) ** 2 + f2)
    s_plus = 1.0 + filt * num / ((gamma_hz - e) ** 2 + f2)
    return s_minus, s_plus


def phase_variance(theta, s_minus, s_plus):
    """Quadrature variance at each readout phase (0 = squeezed quadrature)."""
    th = np.asarray(theta, dtype=np.float64)
    c = np.cos(th)
    s = np.sin(th)
    return s_minus * c * c + s_plus * s * s


def windowed_variance(x, window):
    """Unbiased sample variance over consecutive non-overlapping windows.

    Trailing samples that do not fill a window are dropped.
    """
    xa = np.asarray(x, dtype=np.float64)
    nwin = xa.shape[0] // window
    blocks = xa[: nwin * window].reshape(nwin, window)
    return blocks.var(axis=1, ddof=1)
