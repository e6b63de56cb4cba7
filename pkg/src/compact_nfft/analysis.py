"""Error constants of NFFT windows and the matching theoretical bounds.

The constant ``e_{sigma,N}(phi)`` is the largest uniform norm, over
``n = 0, ..., N/2``, of the normalized aliasing series

    sum_{r != 0} phi_hat(n + r L) / phi_hat(n) * exp(2 pi i r L x),

with ``L`` the oversampled grid length. It is measured in two unrelated
ways: from the Fourier transform (:func:`error_constant_aliasing`) and from
window values only, through the rectangular-rule representation
(:func:`error_constant_periodization`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .windows import Kind, NonpositiveCoefficient, Window, WindowParams

__all__ = [
    "DecayProfile",
    "ErrorConstantResult",
    "BoundReport",
    "error_constant_aliasing",
    "error_constant_periodization",
    "tail_bound",
    "theoretical_bound",
    "bound_is_proxy",
    "mcosh_bound_minus_variant",
    "kaiser_bessel_reference",
    "verify_bound",
    "general_bound_from_profile",
    "proof_profile",
    "decay_model",
]

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
# largest zero-padded FFT used for the sup over t
_MAX_FFT = 1 << 22
# quadrature cost grows like R^2 for windows without a closed-form transform
_NUMERIC_R_CAP = 1024


@dataclass(frozen=True)
class DecayProfile:
    """Bounds ``|phi0_hat(v)| <= c1`` on the first alias annulus and
    ``|phi0_hat(v)| <= c2 |v|^-mu`` beyond it."""

    c1: float
    c2: float
    mu: float

    def __post_init__(self):
        if not (self.c1 > 0 and self.c2 > 0 and self.mu > 1):
            raise ValueError(f"need c1 > 0, c2 > 0, mu > 1; got {self}")


@dataclass(frozen=True)
class ErrorConstantResult:
    """A measured error constant.

    ``value`` is the upper estimate and ``lower`` the companion lower
    estimate. For the aliasing method ``value = lower + tail_bound``. For
    the periodization method ``lower`` is the plain grid maximum and
    ``value`` the refined maximum. ``certified`` is false when the tail
    bound rests on an empirical decay fit or does not exist.
    """

    kind: Kind
    m: int
    sigma: float
    N: int
    beta: float
    value: float
    lower: float
    method: str
    r_max: int
    grid: int
    tail_bound: float
    argmax_n: int
    certified: bool = True
    b: float | None = None


@dataclass(frozen=True)
class BoundReport:
    kind: Kind
    m: int
    sigma: float
    N: int
    measured: float
    bound: float
    ok: bool
    proxy: bool


# --------------------------------------------------------------------------- tails


def tail_bound(u: float, mu: float, scale: float = 1.0, r_max: int = 1) -> float:
    """``scale * 2/(mu-1) * (r_max - |u|)^(1-mu)``.

    This bounds ``scale * sum_{|r| > r_max} |u + r|^-mu``; with the default
    ``r_max = 1`` it is the classical estimate for ``r`` outside ``{0, +-1}``.
    """
    if not abs(u) < 1:
        raise ValueError(f"need |u| < 1, got {u}")
    if not mu > 1:
        raise ValueError(f"need mu > 1, got {mu}")
    if r_max < 1:
        raise ValueError(f"r_max must be >= 1, got {r_max}")
    return scale * 2.0 / (mu - 1.0) * (r_max - abs(u)) ** (1.0 - mu)


@dataclass(frozen=True)
class _DecayModel:
    """``|phi0_hat(w)| <= k0 |w|^-mu`` for ``|w| >= w_min``."""

    k0: float
    mu: float
    w_min: float
    certified: bool


# edge behaviour of the numeric-transform profiles: phi0 ~ c (1-u^2)^((mu-1)/2)
_NUMERIC_MU = {Kind.SINH: 1.5, Kind.EXP: 1.5, Kind.COSH: 2.0, Kind.MEXP: 1.0, Kind.MSINH: 1.0}


def decay_model(w: Window) -> _DecayModel:
    """Power-law envelope of the unscaled transform used to bound alias tails.

    Closed-form kinds get a proven envelope. The others get the exponent
    implied by their edge behaviour and a constant fitted to samples near
    ``r = 2, 4, 8`` times a safety factor of 10; those are flagged as not
    certified. ``mu <= 1`` (a jump at the support edge) means no tail bound
    exists.
    """
    kind, p = w.kind, w.params
    beta = p.beta
    if kind is Kind.BSPLINE:
        m = p.m
        return _DecayModel(m ** (2 * m - 1) / (math.pi ** (2 * m) * w._m0), 2.0 * m, 0.0, True)
    if kind is Kind.MBSPLINE:
        b = w.b
        return _DecayModel(b ** (2 * b - 1) / (math.pi ** (2 * b) * w._m0), 2.0 * b, 0.0, True)
    if kind is Kind.TRIANGULAR:
        return _DecayModel(1.0 / math.pi ** 2, 2.0, 0.0, True)
    if kind is Kind.ALGEBRAIC:
        # |J_beta(x)| <= sqrt(2/pi) (x^2 - beta^2 + 1/4)^(-1/4) <= sqrt(2/pi) (3x^2/4)^(-1/4), x >= 2 beta
        log_k0 = (
            0.5 * math.log(math.pi) + math.lgamma(beta + 0.5) - beta * math.log(math.pi)
            + 0.5 * math.log(2.0 / math.pi) + 0.25 * math.log(4.0 / 3.0)
            - 0.5 * math.log(2.0 * math.pi)
        )
        return _DecayModel(math.exp(log_k0), beta + 0.5, beta / math.pi, True)
    if kind is Kind.BESSEL:
        # |j2(z)| <= 7/(3z) for z >= 3 and z >= 2 pi w / sqrt(2) once 2 pi w >= sqrt(2) beta
        k0 = 2.0 * beta ** 2 / float(specfun.bessel_i(2, beta)) * (7.0 / 3.0) * 2 ** 1.5 / (2 * math.pi) ** 3
        w_min = max(math.sqrt(2.0) * beta, math.sqrt(beta ** 2 + 9.0)) / (2 * math.pi)
        return _DecayModel(k0, 3.0, w_min, True)
    if kind is Kind.MCOSH:
        # mean value theorem on J0 with the Kraenkel bound for J1
        k0 = math.pi / (2.0 * math.sinh(0.5 * beta) ** 2) * 2.0 / math.sqrt(math.pi) * beta ** 2 \
            * (2 * math.pi) ** -1.5
        w_min = max(math.sqrt(2.0) * beta, 1.75) / (2 * math.pi)
        return _DecayModel(k0, 1.5, w_min, True)
    mu = _NUMERIC_MU[kind]
    a, L = w.support, w.grid_length
    samples = np.concatenate(
        [a * (r * L + np.linspace(-L / 2, L / 2, 33)) for r in (2, 4, 8)]
    )
    fitted = np.max(np.abs(w.unscaled_ft_numeric(samples)) * samples ** mu)
    return _DecayModel(10.0 * float(fitted), mu, a * 1.5 * L, False)


def _tail_for(w: Window, model: _DecayModel, n, phi_n, R):
    """Bound on ``sum_{|r| > R} |phi_hat(n + r L)| / phi_hat(n)``."""
    n = np.asarray(n, dtype=float)
    if model.mu <= 1:
        return np.full(n.shape, np.inf)
    a, L = w.support, w.grid_length
    scale = model.k0 * a ** (1 - model.mu) * L ** -model.mu
    u = n / L
    return scale * 2.0 / (model.mu - 1.0) * (R - np.abs(u)) ** (1.0 - model.mu) / phi_n


def _min_valid_r(w: Window, model: _DecayModel) -> int:
    """Smallest ``R`` with every ``|r| > R`` inside the envelope's range."""
    a, L, N = w.support, w.grid_length, w.params.N
    # need a * ((R+1) L - N/2) >= w_min
    return max(1, int(math.ceil((model.w_min / a + N / 2) / L)) - 1)


# --------------------------------------------------------------------------- sup search


def _golden_max(f, lo, hi, tol):
    """Vectorized golden-section search for maxima of ``f`` on ``[lo, hi]``."""
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(200):
        if np.max(hi - lo) <= tol:
            break
        left = f1 >= f2
        hi = np.where(left, x2, hi)
        lo = np.where(left, lo, x1)
        x2n = np.where(left, x1, lo + _GOLDEN * (hi - lo))
        x1n = np.where(left, hi - _GOLDEN * (hi - lo), x2)
        f2n = np.where(left, f1, np.nan)
        f1n = np.where(left, np.nan, f2)
        new1, new2 = np.isnan(f1n), np.isnan(f2n)
        if np.any(new1):
            f1n[new1] = f(x1n)[new1]
        if np.any(new2):
            f2n[new2] = f(x2n)[new2]
        x1, x2, f1, f2 = x1n, x2n, f1n, f2n
    return np.maximum(f1, f2)


def _fft_grid_size(R: int, floor: int = 4096) -> int:
    g = max(floor, 64 * R)
    g = min(g, _MAX_FFT)
    g = max(g, 4 * R)
    return 1 << int(math.ceil(math.log2(g)))


def _series_sup(coef, R, grid, peaks=3):
    """``sup_t |sum_{1<=|r|<=R} a_r exp(2 pi i r t)|`` for one coefficient row.

    ``coef`` holds ``a_{-R..-1}`` followed by ``a_{1..R}``.
    """
    r = np.concatenate([np.arange(-R, 0), np.arange(1, R + 1)])
    buf = np.zeros(grid, dtype=complex)
    buf[r % grid] = coef
    vals = np.abs(np.fft.ifft(buf) * grid)
    grid_max = float(vals.max())
    # local maxima, best first
    is_peak = (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
    idx = np.flatnonzero(is_peak)
    idx = idx[np.argsort(vals[idx])[::-1][:peaks]]
    t0 = idx / grid
    h = 1.0 / grid

    def f(t):
        # direct sum, blocked to bound memory
        out = np.zeros(t.shape, dtype=complex)
        for i in range(0, r.size, 1 << 16):
            rr = r[i:i + (1 << 16)]
            out += np.exp(2j * np.pi * np.outer(t, rr)) @ coef[i:i + (1 << 16)]
        return np.abs(out)

    refined = _golden_max(f, t0 - h, t0 + h, 1e-12)
    return max(grid_max, float(refined.max())), grid_max


def _alias_rows(w: Window, n, R, phi_n):
    """Rows ``a_r(n) = phi_hat(n + r L) / phi_hat(n)`` for ``1 <= |r| <= R``."""
    L = w.grid_length
    r = np.concatenate([np.arange(-R, 0), np.arange(1, R + 1)])
    n = np.atleast_1d(n)
    args = n[:, None] + r[None, :] * L
    return w.fourier_transform(args) / np.asarray(phi_n)[:, None]


def _with_N(w: Window, N: int | None) -> Window:
    if N is None or N == w.params.N:
        return w
    p = w.params
    return Window(w.kind, WindowParams(p.m, p.sigma, N, p.beta), b=w.b)


def error_constant_aliasing(w: Window, N: int | None = None, tol: float = 1e-12,
                            rmax_cap: int = 10 ** 6, grid: int = 4096) -> ErrorConstantResult:
    """Error constant from the truncated aliasing series plus a tail bound.

    For every ``n`` in ``0..N/2`` the alias coefficients for ``|r| <= R`` are
    summed on a zero-padded FFT grid in ``t``, the best grid peaks are refined
    by golden-section search, and the tail beyond ``R`` is bounded by a power
    law envelope of the transform. ``R`` is the smallest radius whose tail is
    below ``tol * max(value, tol)``, capped at ``rmax_cap`` (and at a smaller
    work cap when the transform needs quadrature). Indices whose envelope
    cannot beat the running maximum are skipped.

    Parameters
    ----------
    grid : int
        Smallest FFT size for the sup over ``t``; larger radii use ``64 R``.

    Raises
    ------
    NonpositiveCoefficient
        If ``phi_hat(n) <= 0`` for some ``n`` in the pass band.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    w = _with_N(w, N)
    p = w.params
    n_all = np.arange(p.N // 2 + 1)
    phi_n = w.fourier_transform(n_all)
    w.check_positive(n_all, phi_n)
    model = decay_model(w)
    cap = int(rmax_cap)
    if not w.kind.has_analytic_ft:
        cap = min(cap, _NUMERIC_R_CAP)
    r_valid = _min_valid_r(w, model)
    r0 = max(1, min(max(16, r_valid), cap))

    # final radius: smallest R whose tail meets the target at every n
    if model.mu > 1:
        target = tol * max(_short_sup_estimate(w, n_all, phi_n, r0), tol)
        a, L = w.support, w.grid_length
        scale = model.k0 * a ** (1 - model.mu) * L ** -model.mu * 2.0 / (model.mu - 1.0)
        u_max = 0.5 * p.N / L
        need = u_max + (scale / (target * phi_n.min())) ** (1.0 / (model.mu - 1.0))
        R = int(min(max(r0, r_valid, math.ceil(need)), cap))
    else:
        R = cap

    # progressive deepening: the radius grows 16-fold per level and indices
    # whose envelope (grid sup with its sampling slack, plus tail) cannot
    # reach the best lower value so far are dropped
    levels = [r0]
    while levels[-1] < R:
        levels.append(min(16 * levels[-1], R))
    cand = n_all
    best_lower = 0.0
    certified_tail = np.isfinite(_tail_for(w, model, 0, 1.0, max(R, r_valid)))
    for level in levels[:-1]:
        g_level = _fft_grid_size(level, grid)
        slack = 1.0 / math.cos(min(2 * math.pi * level / g_level, 1.5))
        sups = np.empty(cand.size)
        env = np.empty(cand.size)
        for i, n in enumerate(cand):
            row = _alias_rows(w, n_all[n:n + 1], level, phi_n[n:n + 1])[0]
            gmax = _grid_sup(row, level, g_level)
            sups[i] = gmax
            env[i] = min(np.abs(row).sum(), gmax * slack)
        best_lower = max(best_lower, float(sups.max()))
        if certified_tail:
            env += _tail_for(w, model, cand, phi_n[cand], max(level, r_valid))
            cand = cand[env >= best_lower]
        else:
            # no tail bound: keep the strongest few indices
            cand = cand[np.argsort(-sups, kind="stable")[:8]]

    if grid < 16:
        raise ValueError(f"grid must be at least 16, got {grid}")
    grid = _fft_grid_size(R, int(grid))
    best = None
    lower_all = 0.0
    for n in cand:
        row = _alias_rows(w, n_all[n:n + 1], R, phi_n[n:n + 1])[0]
        sup, _ = _series_sup(row, R, grid, peaks=3 if R <= 1 << 16 else 1)
        tail = float(_tail_for(w, model, n_all[n], phi_n[n], max(R, r_valid)))
        lower_all = max(lower_all, sup)
        if best is None or sup + tail > best[0]:
            best = (sup + tail, tail, int(n))
    upper, tail, n_best = best
    return ErrorConstantResult(
        kind=w.kind, m=p.m, sigma=p.sigma, N=p.N, beta=p.beta, value=upper,
        lower=lower_all, method="aliasing", r_max=R, grid=grid, tail_bound=tail,
        argmax_n=n_best, certified=model.certified and math.isfinite(tail), b=w.b,
    )


def _grid_sup(row, R, grid):
    r = np.concatenate([np.arange(-R, 0), np.arange(1, R + 1)])
    buf = np.zeros(grid, dtype=complex)
    buf[r % grid] = row
    return float(np.abs(np.fft.ifft(buf) * grid).max())


def _short_sup_estimate(w, n_all, phi_n, r0):
    """Largest grid sup over all ``n`` of the series cut at ``r0``."""
    rows = _alias_rows(w, n_all, r0, phi_n)
    g0 = _fft_grid_size(r0)
    r = np.concatenate([np.arange(-r0, 0), np.arange(1, r0 + 1)])
    buf = np.zeros((n_all.size, g0), dtype=complex)
    buf[:, r % g0] = rows
    return float(np.abs(np.fft.ifft(buf, axis=1) * g0).max())


def error_constant_periodization(w: Window, N: int | None = None,
                                 grid: int | None = None) -> ErrorConstantResult:
    """Error constant from window values only.

    For each ``n`` in ``0..N/2`` evaluates

        | (1/(L c_n)) sum_l exp(-2 pi i n l / L) phi~(x + l/L) - exp(2 pi i n x) |

    on a uniform grid. The modulus has period ``1/L`` in ``x``, so one period
    suffices. The best grid points are refined by golden-section search. The
    ``c_n`` come from quadrature of the window, never from a closed form.

    Parameters
    ----------
    grid : int, optional
        Number of points on ``[0, 1)``; at least ``16 L``. Defaults to ``256 L``.
    """
    w = _with_N(w, N)
    p = w.params
    L = w.grid_length
    grid = 256 * L if grid is None else int(grid)
    if grid < 16 * L:
        raise ValueError(f"grid must be at least 16*L = {16 * L}, got {grid}")
    per_period = int(math.ceil(grid / L))
    n_all = np.arange(p.N // 2 + 1)
    c = w.fourier_transform_numeric(n_all)
    w.check_positive(n_all, c)
    s = w.support_points
    ell = np.arange(-s - 1, s + 1)

    def modulus(x, n):
        """``|E_n(x)|`` for matching 1-d arrays ``x`` and ``n``."""
        pts = x[:, None] + ell[None, :] / L
        vals = w.periodization_eval(pts)
        phase = np.exp(-2j * np.pi * n[:, None] * pts)
        return np.abs((vals * phase).sum(axis=1) / (L * c[n]) - 1.0)

    x = np.arange(per_period) / (per_period * L)
    W = w.periodization_eval(x[:, None] + ell[None, :] / L)
    phase = np.exp(-2j * np.pi * np.outer(ell, n_all) / L)
    inner = (W @ phase) / (L * c[None, :])
    E = np.abs(inner * np.exp(-2j * np.pi * np.outer(x, n_all)) - 1.0)
    grid_max = E.max(axis=0)
    lower = float(grid_max.max())
    cand = np.flatnonzero(grid_max >= 0.8 * lower)
    h = 1.0 / (per_period * L)
    x0 = x[E[:, cand].argmax(axis=0)]
    refined = _golden_max(lambda t: modulus(t, cand), x0 - h, x0 + h, 1e-6 * h)
    values = np.maximum(grid_max[cand], refined)
    k = int(values.argmax())
    return ErrorConstantResult(
        kind=w.kind, m=p.m, sigma=p.sigma, N=p.N, beta=p.beta, value=float(values[k]),
        lower=lower, method="periodization", r_max=0, grid=per_period * L, tail_bound=0.0,
        argmax_n=int(cand[k]), certified=True, b=w.b,
    )


# --------------------------------------------------------------------------- bounds

_SIGMA_RANGE = (1.25, 2.0)
_PROXY = {Kind.EXP: Kind.SINH, Kind.COSH: Kind.SINH, Kind.MEXP: Kind.MCOSH, Kind.MSINH: Kind.MCOSH}


def bound_is_proxy(kind) -> bool:
    """True when the bound is borrowed from a sibling kind without its own theorem."""
    return Kind(kind) in _PROXY


def _exp_rate(m, sigma):
    return math.exp(-2.0 * math.pi * m * math.sqrt(1.0 - 1.0 / sigma))


def _check_sigma_range(kind, sigma):
    lo, hi = _SIGMA_RANGE
    if not lo <= sigma <= hi:
        raise ValueError(f"{kind.value} bound needs sigma in [5/4, 2], got {sigma}")


def theoretical_bound(kind, m: int, sigma: float, b: float | None = None) -> float:
    """Proven upper bound on the error constant of ``kind`` with its default shape.

    ``exp`` and ``cosh`` return the ``sinh`` bound, ``mexp`` and ``msinh`` the
    ``mcosh`` bound; see :func:`bound_is_proxy`. The modified B-spline bound
    refers to the grid of length ``sigma * N * b``.

    Raises
    ------
    ValueError
        For ``m < 2``, a ``sigma`` outside the kind's range, or a kind
        without a bound (triangular).
    """
    kind = Kind(kind)
    if int(m) != m or m < 2:
        raise ValueError(f"m must be an integer >= 2, got {m}")
    kind = _PROXY.get(kind, kind)
    if kind is Kind.BSPLINE:
        if not sigma > 1:
            raise ValueError(f"bspline bound needs sigma > 1, got {sigma}")
        return 4.0 * m / (2.0 * m - 1.0) * (2.0 * sigma - 1.0) ** (-2.0 * m)
    if kind is Kind.MBSPLINE:
        if b is None:
            raise ValueError("mbspline bound needs b")
        if not (sigma >= 1 and 2 * sigma * b >= 3 and b != m and m < 2 * sigma * b):
            raise ValueError(f"mbspline bound does not apply to m={m}, sigma={sigma}, b={b}")
        return 4.0 * b / (2.0 * b - 1.0) * (2.0 * sigma * b - 1.0) ** (-2.0 * b)
    if kind is Kind.ALGEBRAIC:
        if not (sigma > math.pi / 3 and sigma > 1):
            raise ValueError(f"algebraic bound needs sigma > pi/3 and sigma > 1, got {sigma}")
        j = float(specfun.bessel_j(3 * m, math.pi * m / sigma))
        return (
            3.0 * math.sqrt(sigma) / (math.sqrt(math.pi * m) * j)
            * (1.0 + (2.0 * sigma - 1.0) / ((6.0 * m - 1.0) * sigma))
            * (2.0 * sigma - 1.0) ** (-3.0 * m - 0.5)
        )
    if kind is Kind.BESSEL:
        _check_sigma_range(kind, sigma)
        return (50.0 * m ** 3 + 7.0) * _exp_rate(m, sigma)
    if kind is Kind.SINH:
        _check_sigma_range(kind, sigma)
        return (24.0 * m ** 1.5 + 3.0) * _exp_rate(m, sigma)
    if kind is Kind.MCOSH:
        _check_sigma_range(kind, sigma)
        return 5.25 / (float(specfun.bessel_i(0, 2 * math.pi * m * math.sqrt(1 - 1 / sigma))) + 0.5)
    raise ValueError(f"no theoretical bound for {kind.value}")


def mcosh_bound_minus_variant(m: int, sigma: float) -> float:
    """The ``mcosh`` bound with ``I0(...) - 1/2`` in the denominator."""
    _check_sigma_range(Kind.MCOSH, sigma)
    return 5.25 / (float(specfun.bessel_i(0, 2 * math.pi * m * math.sqrt(1 - 1 / sigma))) - 0.5)


def kaiser_bessel_reference(m: int, sigma: float) -> float:
    """``4 m^(3/2) exp(-2 pi m sqrt(1 - 1/sigma))``, for comparison only."""
    return 4.0 * m ** 1.5 * _exp_rate(m, sigma)


def verify_bound(kind, m: int, sigma: float, N: int, b: float | None = None,
                 method: str = "periodization", **kwargs) -> BoundReport:
    """Measure the constant with the default shape and compare with the bound.

    ``ok`` allows a relative slack of 1e-9. For proxy bounds it is advisory.
    """
    from .windows import make_window

    kind = Kind(kind)
    bound = theoretical_bound(kind, m, sigma, b=b)
    w = make_window(kind, m, sigma, N, b=b)
    if method == "periodization":
        res = error_constant_periodization(w, **kwargs)
    elif method == "aliasing":
        res = error_constant_aliasing(w, **kwargs)
    else:
        raise ValueError(f"unknown method {method!r}")
    ok = res.value <= bound * (1.0 + 1e-9)
    return BoundReport(kind, m, sigma, N, res.value, bound, ok, bound_is_proxy(kind))


def general_bound_from_profile(profile: DecayProfile, unscaled_ft_at_half_band: float,
                               m: int, sigma: float) -> float:
    """``(1/phi0_hat(m/(2 sigma))) [2 c1 + 2 c2/((mu-1) m^mu) (1 - 1/(2 sigma))^(1-mu)]``."""
    if not unscaled_ft_at_half_band > 0:
        raise ValueError("the transform at the band edge must be positive")
    c1, c2, mu = profile.c1, profile.c2, profile.mu
    return (
        2.0 * c1 + 2.0 * c2 / ((mu - 1.0) * m ** mu) * (1.0 - 1.0 / (2.0 * sigma)) ** (1.0 - mu)
    ) / unscaled_ft_at_half_band


def proof_profile(kind, m: int, sigma: float) -> DecayProfile:
    """Decay constants used in the proofs of the algebraic, Bessel and mcosh bounds."""
    kind = Kind(kind)
    if kind is Kind.ALGEBRAIC:
        beta = 3 * m
        mu = beta + 0.5
        log_c2 = (
            math.log(3.0) + math.lgamma(2 * beta + 1) - 1.5 * math.log(2.0)
            - beta * math.log(4.0) - math.lgamma(beta + 1) - (beta - 0.5) * math.log(math.pi)
        )
        c2 = math.exp(log_c2)
        c1 = c2 * m ** (-beta - 0.5) * (1.0 - 1.0 / (2.0 * sigma)) ** (1.0 - mu)
        return DecayProfile(c1, c2, mu)
    beta = 2.0 * math.pi * m * (1.0 - 1.0 / (2.0 * sigma))
    if kind is Kind.BESSEL:
        i2 = float(specfun.bessel_i(2, beta))
        c1 = 2.0 * beta ** 2 / (15.0 * i2)
        c2 = (
            m ** 2 * (2 * sigma + 1) ** 3 / (32.0 * sigma * math.sqrt(math.pi * sigma) * i2)
            * (1.0 - 1.0 / (2.0 * sigma)) ** 2
        )
        return DecayProfile(c1, c2, 3.0)
    if kind is Kind.MCOSH:
        ch = math.cosh(beta) - 1.0
        c1 = 3.0 * math.pi / (2.0 * ch)
        c2 = 3.0 * math.pi * m ** 2 / (2.0 * ch) * (1.0 - 1.0 / (2.0 * sigma)) ** 2
        return DecayProfile(c1, c2, 2.0)
    raise ValueError(f"no decay profile recorded for {kind.value}")
