"""Forward and adjoint NFFT of a random polynomial, checked against the direct sums.

Run with ``python demos/forward_and_adjoint.py``.
"""

import numpy as np

from compact_nfft import (
    NfftPlan,
    NodeSet,
    TrigPolynomial,
    error_constant_periodization,
    make_window,
    ndft_adjoint,
    ndft_forward,
    nfft_adjoint,
    nfft_forward,
)

rng = np.random.default_rng(1)
N, M = 256, 1000
nodes = NodeSet(rng.uniform(-0.5, 0.5, M))
poly = TrigPolynomial(N, rng.standard_normal(N) + 1j * rng.standard_normal(N))
values = rng.standard_normal(M) + 1j * rng.standard_normal(M)

print(f"{'window':10s} {'m':>2s} {'e_const':>11s} {'fwd err/budget':>15s} {'adj err/budget':>15s}")
for kind in ("bspline", "bessel", "sinh", "mcosh"):
    for m in (2, 4, 6):
        w = make_window(kind, m, 2.0, N)
        e = error_constant_periodization(w).value
        plan = NfftPlan(w, nodes)
        fwd = np.max(np.abs(nfft_forward(plan, poly) - ndft_forward(poly, nodes)))
        adj = np.max(np.abs(nfft_adjoint(plan, values) - ndft_adjoint(values, nodes, N)))
        print(f"{kind:10s} {m:2d} {e:11.4e} "
              f"{fwd / (e * np.abs(poly.coeffs).sum()):15.3e} {adj / (e * np.abs(values).sum()):15.3e}")
