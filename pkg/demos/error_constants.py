"""Measured error constants next to the proven bounds for sigma = 1.5.

Run with ``python demos/error_constants.py``. The two alias columns are the
lower and upper estimates of the aliasing method; the periodization value
falls between them when the alias tail is certified.
"""

import warnings

from compact_nfft import (
    WideWindowWarning,
    error_constant_aliasing,
    error_constant_periodization,
    make_window,
    theoretical_bound,
)

warnings.simplefilter("ignore", WideWindowWarning)
sigma, N = 1.5, 1024
print(f"{'window':10s} {'m':>2s} {'periodization':>14s} {'alias lower':>12s} {'alias upper':>12s} {'bound':>11s}")
for kind in ("bspline", "algebraic", "bessel", "mcosh"):
    for m in range(2, 7):
        w = make_window(kind, m, sigma, N)
        per = error_constant_periodization(w)
        ali = error_constant_aliasing(w, rmax_cap=2 ** 16)
        print(f"{kind:10s} {m:2d} {per.value:14.5e} {ali.lower:12.5e} {ali.value:12.5e} "
              f"{theoretical_bound(kind, m, sigma):11.4e}")
