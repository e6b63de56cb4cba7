"""Special functions used by the window and bound formulas.

Everything here works on numpy arrays (and scalars) of nonnegative real
arguments. Only real orders ``mu >= 0`` are supported.
"""

import math

import numpy as np

__all__ = [
    "sinc",
    "cardinal_bspline",
    "bessel_j",
    "bessel_i",
    "bessel_j_scaled",
    "spherical_j2",
    "spherical_i2",
    "spherical_j2_over_square",
    "spherical_i2_over_square",
    "riemann_zeta",
]

# below this argument the J series is used (cancellation stays below ~1e-2 digits lost)
_J_SERIES_MAX = 5.0
# above this argument the Hankel expansion is accurate to rounding for moderate order
_HANKEL_MIN = 40.0


def _as_array(x):
    arr = np.asarray(x, dtype=float)
    return arr, arr.ndim == 0


def _check_order(mu):
    mu = float(mu)
    if not math.isfinite(mu) or mu < 0:
        raise ValueError(f"Bessel order must be finite and nonnegative, got {mu}")
    return mu


def _check_nonneg(x, name="x"):
    if np.any(~np.isfinite(x)) or np.any(x < 0):
        raise ValueError(f"{name} must be finite and nonnegative")


def sinc(x):
    """Unnormalized cardinal sine ``sin(x)/x`` with ``sinc(0) = 1``."""
    x, scalar = _as_array(x)
    out = np.ones_like(x)
    nz = x != 0
    out[nz] = np.sin(x[nz]) / x[nz]
    return out[()] if scalar else out


def cardinal_bspline(order, x):
    """Centered cardinal B-spline ``M_order`` evaluated at ``x``.

    Uses the three-term recursion bottom-up: level ``j`` holds ``M_j`` at the
    ``order - j + 1`` shifted arguments that level ``j + 1`` needs, so the cost
    is quadratic in ``order``.

    Parameters
    ----------
    order : int
        Spline order, at least 1. ``M_order`` is supported on
        ``[-order/2, order/2]``.
    x : array_like
        Evaluation points.
    """
    if int(order) != order or order < 1:
        raise ValueError(f"B-spline order must be an integer >= 1, got {order}")
    order = int(order)
    x, scalar = _as_array(x)
    p = order
    # leaves M_1(w - 1/2 - k), k = 0..p-1, with w = x + p/2. They are decided
    # from the single rounded w so that neighbouring leaves stay consistent
    w = x[..., None] + p / 2.0
    k = np.arange(p)
    level = np.where((w > k) & (w < k + 1), 1.0, np.where((w == k) | (w == k + 1), 0.5, 0.0))
    for j in range(2, p + 1):
        # level j at shift s_k = (p - j)/2 - k, k = 0..p-j
        s = (p - j) / 2.0 - np.arange(p - j + 1)
        t = x[..., None] + s
        left = level[..., :-1]   # M_{j-1}(t + 1/2)
        right = level[..., 1:]   # M_{j-1}(t - 1/2)
        level = ((t + j / 2.0) * left + (j / 2.0 - t) * right) / (j - 1)
    out = level[..., 0]
    out = np.where(np.abs(x) >= p / 2.0, 0.0, out) if p > 1 else out
    return out[()] if scalar else out


def _j_series(mu, x):
    """Power series of ``J_mu(x) / (x/2)^mu``."""
    q = -(x / 2.0) ** 2
    term = np.full_like(x, 1.0 / math.gamma(mu + 1.0))
    total = term.copy()
    kmax = int(np.ceil(np.max(x, initial=0.0))) * 2 + 30
    for k in range(kmax):
        term = term * q / ((k + 1) * (mu + k + 1))
        total += term
        if np.all(np.abs(term) <= 1e-17 * np.abs(total)):
            break
    return total


def _j_hankel(mu, x):
    """Hankel asymptotic expansion of ``J_mu`` for large ``x``."""
    four_mu2 = 4.0 * mu * mu
    p = np.ones_like(x)
    q = np.zeros_like(x)
    term = np.ones_like(x)
    best = np.full_like(x, np.inf)
    done = np.zeros(x.shape, dtype=bool)
    for k in range(1, 80):
        term = term * (four_mu2 - (2 * k - 1) ** 2) / (k * 8.0 * x)
        mag = np.abs(term)
        # stop each element at its smallest term (optimal truncation)
        done |= mag >= best
        best = np.where(done, best, mag)
        t = np.where(done, 0.0, term)
        if k % 2 == 1:
            q += t if (k // 2) % 2 == 0 else -t
        else:
            p += -t if (k // 2) % 2 == 1 else t
        if np.all(done | (mag < 1e-17)):
            break
    # expand cos/sin(x - phase) so x itself is reduced exactly
    phase = (0.5 * mu + 0.25) * np.pi
    cx, sx = np.cos(x), np.sin(x)
    cp, sp = math.cos(phase), math.sin(phase)
    cos_chi = cx * cp + sx * sp
    sin_chi = sx * cp - cx * sp
    return np.sqrt(2.0 / (np.pi * x)) * (p * cos_chi - q * sin_chi)


def _j_miller(mu, x):
    """Miller's backward recurrence for ``J_mu(x)``, normalized by the
    Neumann-type identity ``(x/2)^nu = sum_k (nu+2k) Gamma(nu+k)/k! J_{nu+2k}(x)``."""
    n0 = int(math.floor(mu))
    nu = mu - n0
    xmax = float(np.max(x))
    kstart = int(max(xmax, mu) + 30 + 6 * xmax ** (1.0 / 3.0))
    kstart += kstart % 2
    f_next = np.zeros_like(x)
    f_cur = np.full_like(x, 1e-300)
    norm = np.zeros_like(x)
    target = np.zeros_like(x)
    # weights of the normalization identity for even k
    for k in range(kstart, -1, -1):
        # f_cur ~ J_{nu+k}
        if k == n0:
            target = f_cur.copy()
        if k % 2 == 0:
            kk = k // 2
            if nu == 0.0:
                w = 1.0 if kk == 0 else 2.0
            else:
                w = (nu + k) * math.exp(math.lgamma(nu + kk) - math.lgamma(kk + 1))
            norm += w * f_cur
        if k == 0:
            break
        f_prev = 2.0 * (nu + k) / x * f_cur - f_next
        f_next, f_cur = f_cur, f_prev
        big = np.abs(f_cur) > 1e250
        if np.any(big):
            scale = np.where(big, 1e-250, 1.0)
            f_cur *= scale
            f_next *= scale
            norm *= scale
            target *= scale
    return target * (x / 2.0) ** nu / norm


def bessel_j(mu, x):
    """Bessel function of the first kind ``J_mu(x)`` for ``mu, x >= 0``.

    Power series for small ``x``, Miller's backward recurrence in the middle
    range and the Hankel expansion for large ``x``.
    """
    mu = _check_order(mu)
    x, scalar = _as_array(x)
    _check_nonneg(x)
    out = np.empty_like(x)
    series_max = max(_J_SERIES_MAX, 0.5 * mu)
    hankel_min = max(_HANKEL_MIN, 0.5 * mu * mu + 20.0)
    small = x <= series_max
    large = x >= hankel_min
    mid = ~(small | large)
    if np.any(small):
        xs = x[small]
        with np.errstate(divide="ignore"):
            pw = np.where(xs > 0, (xs / 2.0) ** mu, 1.0 if mu == 0 else 0.0)
        out[small] = pw * _j_series(mu, xs)
    if np.any(mid):
        out[mid] = _j_miller(mu, x[mid])
    if np.any(large):
        out[large] = _j_hankel(mu, x[large])
    return out[()] if scalar else out


def bessel_j_scaled(mu, x):
    """``J_mu(x) / (x/2)^mu``, finite at ``x = 0`` where it equals ``1/Gamma(mu+1)``."""
    mu = _check_order(mu)
    x, scalar = _as_array(x)
    _check_nonneg(x)
    out = np.empty_like(x)
    small = x <= max(_J_SERIES_MAX, 0.5 * mu)
    if np.any(small):
        out[small] = _j_series(mu, x[small])
    if np.any(~small):
        xl = x[~small]
        out[~small] = bessel_j(mu, xl) / (xl / 2.0) ** mu
    return out[()] if scalar else out


def bessel_i(mu, x):
    """Modified Bessel function of the first kind ``I_mu(x)`` for ``mu, x >= 0``.

    The defining series has positive terms, so summing it directly is
    accurate to a few ulps per term; it is used up to the overflow limit.
    """
    mu = _check_order(mu)
    x, scalar = _as_array(x)
    _check_nonneg(x)
    out = np.zeros_like(x)
    pos = x > 0
    if mu == 0:
        out[~pos] = 1.0
    if np.any(pos):
        xp = x[pos]
        half = xp / 2.0
        log_t0 = mu * np.log(half) - math.lgamma(mu + 1.0)
        term = np.ones_like(xp)
        total = np.ones_like(xp)
        q = half * half
        kmax = int(np.max(xp)) + 10 * int(math.sqrt(np.max(xp)) + 1) + 40
        for k in range(kmax):
            term = term * q / ((k + 1) * (mu + k + 1))
            total += term
            if np.all(term <= 1e-17 * total):
                break
        with np.errstate(over="ignore"):
            out[pos] = np.exp(log_t0 + np.log(total))
    return out[()] if scalar else out


def _double_factorial(n):
    return math.prod(range(n, 0, -2)) if n > 0 else 1


# coefficients of j2(x)/x^2 = sum_k (-1)^k x^(2k) / (2^k k! (2k+5)!!)
_SPH_COEFFS = np.array(
    [1.0 / (2 ** k * math.factorial(k) * _double_factorial(2 * k + 5)) for k in range(14)]
)
# the series is used below this argument; closed forms cancel badly near 0
_SPH_SERIES_MAX = 1.0


def _sph_series(x, sign):
    q = sign * x * x
    total = np.zeros_like(x)
    for c in _SPH_COEFFS[::-1]:
        total = total * q + c
    return total


def spherical_j2_over_square(x):
    """``j_2(x) / x^2``, with the value ``1/15`` at ``x = 0``."""
    x, scalar = _as_array(x)
    out = np.empty_like(x)
    small = x < _SPH_SERIES_MAX
    out[small] = _sph_series(x[small], -1.0)
    xl = x[~small]
    out[~small] = ((3.0 / xl ** 3 - 1.0 / xl) * np.sin(xl) - 3.0 / xl ** 2 * np.cos(xl)) / xl ** 2
    return out[()] if scalar else out


def spherical_i2_over_square(x):
    """``i_2(x) / x^2``, with the value ``1/15`` at ``x = 0``."""
    x, scalar = _as_array(x)
    out = np.empty_like(x)
    small = x < _SPH_SERIES_MAX
    out[small] = _sph_series(x[small], 1.0)
    xl = x[~small]
    with np.errstate(over="ignore"):
        out[~small] = ((3.0 / xl ** 3 + 1.0 / xl) * np.sinh(xl) - 3.0 / xl ** 2 * np.cosh(xl)) / xl ** 2
    return out[()] if scalar else out


def spherical_j2(x):
    """Spherical Bessel function ``j_2(x) = sqrt(pi/(2x)) J_{5/2}(x)``, ``j_2(0) = 0``."""
    x, scalar = _as_array(x)
    _check_nonneg(x)
    out = x * x * spherical_j2_over_square(x)
    return out[()] if scalar else out


def spherical_i2(x):
    """Modified spherical Bessel function ``i_2(x) = sqrt(pi/(2x)) I_{5/2}(x)``, ``i_2(0) = 0``."""
    x, scalar = _as_array(x)
    _check_nonneg(x)
    out = x * x * spherical_i2_over_square(x)
    return out[()] if scalar else out


def riemann_zeta(s):
    """Riemann zeta function for real ``s > 1``.

    Direct summation of the first terms plus an Euler-Maclaurin tail.
    """
    s = float(s)
    if not s > 1:
        raise ValueError(f"zeta(s) requires s > 1, got {s}")
    n = 50
    head = math.fsum(k ** -s for k in range(1, n))
    # Euler-Maclaurin remainder for sum_{k>=n} k^-s
    tail = n ** (1 - s) / (s - 1) + 0.5 * n ** -s
    # Bernoulli corrections B2/2!, B4/4!, B6/6!, B8/8!
    bern = [1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30]
    rising = s
    for j, b in enumerate(bern):
        order = 2 * j + 1
        if j > 0:
            rising *= (s + order - 2) * (s + order - 1)
        tail += b / math.factorial(2 * j + 2) * rising * n ** (-s - order)
    return head + tail
