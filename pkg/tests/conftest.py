"""Shared extended-precision oracles.

Everything here is written directly from the defining formulas with mpmath
and never calls into the package, so it can serve as an independent check.
"""

import warnings

import mpmath as mp
import numpy as np
import pytest

from compact_nfft.windows import Kind, WideWindowWarning

mp.mp.dps = 40

ALL_KINDS = list(Kind)
SEMICIRCLE_KINDS = [Kind.ALGEBRAIC, Kind.BESSEL, Kind.SINH, Kind.EXP, Kind.COSH,
                    Kind.MCOSH, Kind.MEXP, Kind.MSINH]
ANALYTIC_KINDS = [k for k in Kind if k.has_analytic_ft]


@pytest.fixture(autouse=True)
def _quiet_wide_windows():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", WideWindowWarning)
        yield


def mp_bspline(order, x):
    """Centered cardinal B-spline from the truncated-power formula."""
    x = mp.mpf(x)
    total = mp.mpf(0)
    for k in range(order + 1):
        t = x + mp.mpf(order) / 2 - k
        if t > 0:
            total += (-1) ** k * mp.binomial(order, k) * t ** (order - 1)
    return total / mp.factorial(order - 1)


def mp_profile(kind, u, m, beta, b=None):
    """Unscaled profile on ``[-1, 1]`` straight from its definition."""
    kind = Kind(kind)
    u = mp.mpf(u)
    if abs(u) >= 1:
        return mp.mpf(0)
    if kind is Kind.BSPLINE:
        return mp_bspline(2 * m, m * u) / mp_bspline(2 * m, 0)
    if kind is Kind.MBSPLINE:
        p = int(2 * b)
        return mp_bspline(p, mp.mpf(b) * u) / mp_bspline(p, 0)
    if kind is Kind.TRIANGULAR:
        return 1 - abs(u)
    beta = mp.mpf(beta)
    s = mp.sqrt(1 - u * u)
    if kind is Kind.ALGEBRAIC:
        return s ** (2 * beta - 1)
    if kind is Kind.BESSEL:
        return s * s * mp.besseli(2, beta * s) / mp.besseli(2, beta)
    if kind is Kind.SINH:
        return mp.sinh(beta * s) / mp.sinh(beta)
    if kind is Kind.EXP:
        return (mp.exp(beta * s) - 1) / (mp.exp(beta) - 1)
    if kind is Kind.COSH:
        return (mp.cosh(beta * s) - 1) / (mp.cosh(beta) - 1)
    if kind is Kind.MCOSH:
        return (mp.cosh(beta * s) - 1) / ((mp.cosh(beta) - 1) * s)
    if kind is Kind.MEXP:
        return (mp.exp(beta * s) - 1) / ((mp.exp(beta) - 1) * s)
    if kind is Kind.MSINH:
        return mp.sinh(beta * s) / (mp.sinh(beta) * s)
    raise AssertionError(kind)


def mp_unscaled_ft(kind, v, m, beta, b=None):
    """``2 int_0^1 phi0(u) cos(2 pi v u) du`` by adaptive mpmath quadrature.

    The semicircle kinds are integrated in ``theta`` with ``u = sin(theta)``,
    which removes the square-root edge; the spline kinds are split at knots.
    """
    kind = Kind(kind)
    v = mp.mpf(v)
    if kind in (Kind.BSPLINE, Kind.MBSPLINE, Kind.TRIANGULAR):
        order = {Kind.BSPLINE: 2 * m, Kind.TRIANGULAR: 2}.get(kind, None)
        scale = {Kind.BSPLINE: m, Kind.TRIANGULAR: 1}.get(kind, None)
        if kind is Kind.MBSPLINE:
            order, scale = int(2 * b), mp.mpf(b)
        # knots of M_order(scale * u) inside [0, 1]
        knots = sorted({mp.mpf(0), mp.mpf(1)} | {
            (mp.mpf(order) / 2 - k) / scale for k in range(order + 1)
            if 0 < (mp.mpf(order) / 2 - k) / scale < 1
        })
        pts = _refine(knots, v)
        f = lambda u: mp_profile(kind, u, m, beta, b) * mp.cos(2 * mp.pi * v * u)
        return 2 * mp.quad(f, pts)
    # u = sin(theta); phi0(u) du = phi0(sin th) cos th d th, smooth in theta
    g = lambda th: (mp_profile(kind, mp.sin(th), m, beta) * mp.cos(th)
                    * mp.cos(2 * mp.pi * v * mp.sin(th)))
    pts = _refine([mp.mpf(0), mp.pi / 2], v)
    return 2 * mp.quad(g, pts)


def _refine(knots, v):
    """Split each interval so no panel spans more than about one oscillation."""
    pieces = max(1, int(abs(v)) + 1)
    pts = []
    for a, c in zip(knots[:-1], knots[1:]):
        for i in range(pieces):
            pts.append(a + (c - a) * i / pieces)
    pts.append(knots[-1])
    return pts


def rel_err(a, b):
    return abs(a - b) / abs(b)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)



def window_breakpoints(w):
    """Points of ``[-1/2, 1/2)`` where ``sum_l g_l phi(x - l/L)`` may lose smoothness."""
    kind, p = w.kind, w.params
    if kind is Kind.BSPLINE:
        knots_u = np.arange(-p.m, p.m + 1) / p.m
    elif kind is Kind.MBSPLINE:
        # knots of M_{2b}(b u) sit on a half-integer lattice in b u
        j = np.arange(-int(2 * w.b), int(2 * w.b) + 1)
        knots_u = j / (2 * w.b)
    else:
        knots_u = np.array([-1.0, 0.0, 1.0])
    L = w.grid_length
    pts = (np.arange(L)[:, None] / L + knots_u[None, :] * w.support).ravel()
    pts = (pts + 0.5) % 1.0 - 0.5
    pts = np.unique(np.round(np.append(pts, -0.5) * 2 ** 40) / 2 ** 40)
    return np.append(pts, 0.5)


def tanh_sinh_rule(h=1 / 16, tmax=3.2):
    """Nodes in ``(-1, 1)`` and weights of the double-exponential rule."""
    t = np.arange(-tmax, tmax + h / 2, h)
    arg = 0.5 * np.pi * np.sinh(t)
    x = np.tanh(arg)
    wts = h * 0.5 * np.pi * np.cosh(t) / np.cosh(arg) ** 2
    keep = np.abs(x) < 1
    return x[keep], wts[keep]


def composite_nodes(breaks, rule=None):
    """Composite double-exponential nodes and weights over consecutive breakpoints."""
    x0, w0 = rule or tanh_sinh_rule()
    a, c = breaks[:-1, None], breaks[1:, None]
    half = (c - a) / 2
    x = (a + half * (1 + x0[None, :])).ravel()
    wts = (half * w0[None, :]).ravel()
    return x, wts
