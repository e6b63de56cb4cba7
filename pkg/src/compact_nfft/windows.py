"""Compactly supported window functions for the NFFT.

A window ``phi`` is even, supported on ``[-m/N1, m/N1]``, equal to 1 at the
origin and has a positive Fourier transform on the pass band
``[-N/2, N/2]``. Every kind is built from an unscaled profile ``phi0`` on
``[-1, 1]`` through ``phi(x) = phi0(N1 x / m)``, hence
``phi_hat(v) = (m/N1) phi0_hat(m v / N1)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.polynomial.legendre import leggauss

from . import specfun

__all__ = [
    "Kind",
    "WindowParams",
    "Window",
    "NonpositiveCoefficient",
    "WideWindowWarning",
    "default_beta",
    "make_window",
    "default_b",
    "POSITIVITY_FLOOR",
]


class Kind(str, Enum):
    """Window kinds, valued by their command-line names."""

    BSPLINE = "bspline"
    MBSPLINE = "mbspline"
    TRIANGULAR = "triangular"
    ALGEBRAIC = "algebraic"
    BESSEL = "bessel"
    SINH = "sinh"
    EXP = "exp"
    COSH = "cosh"
    MCOSH = "mcosh"
    MEXP = "mexp"
    MSINH = "msinh"

    @property
    def has_analytic_ft(self) -> bool:
        return self in _ANALYTIC

    @property
    def is_semicircle(self) -> bool:
        """Profile is a function of ``sqrt(1 - u^2)``."""
        return self not in (Kind.BSPLINE, Kind.MBSPLINE, Kind.TRIANGULAR)

    @property
    def is_modified(self) -> bool:
        return self in (Kind.MCOSH, Kind.MEXP, Kind.MSINH)


_ANALYTIC = frozenset(
    {Kind.BSPLINE, Kind.MBSPLINE, Kind.TRIANGULAR, Kind.ALGEBRAIC, Kind.BESSEL, Kind.MCOSH}
)


class NonpositiveCoefficient(ValueError):
    """A Fourier coefficient on the pass band is not positive."""


class WideWindowWarning(UserWarning):
    """The window support is not small compared with the grid (2m > N1/8)."""


def default_beta(m: int, sigma: float) -> float:
    """Recommended shape parameter ``2 pi m (1 - 1/(2 sigma))``."""
    if m < 2 or not sigma > 1:
        raise ValueError(f"need m >= 2 and sigma > 1, got m={m}, sigma={sigma}")
    return 2.0 * math.pi * m * (1.0 - 1.0 / (2.0 * sigma))


@dataclass(frozen=True)
class WindowParams:
    """Parameters ``(m, sigma, N, N1, beta)`` shared by windows and transforms.

    ``N1 = sigma * N`` is derived and must be an even integer.
    """

    m: int
    sigma: float
    N: int
    beta: float
    N1: int = field(init=False)

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2 or self.N % 2:
            raise ValueError(f"N must be an even integer >= 2, got {self.N}")
        if int(self.m) != self.m or self.m < 2:
            raise ValueError(f"m must be an integer >= 2, got {self.m}")
        if not math.isfinite(self.sigma) or not self.sigma > 1:
            raise ValueError(f"sigma must exceed 1, got {self.sigma}")
        prod = self.sigma * self.N
        n1 = int(round(prod))
        if abs(prod - n1) >= 1e-9 or n1 % 2:
            raise ValueError(f"sigma*N must be an even integer, got {prod}")
        if not 2 * self.m < n1:
            raise ValueError(f"need 2m < N1, got m={self.m}, N1={n1}")
        if not (math.isfinite(self.beta) and self.beta > 0):
            raise ValueError(f"beta must be positive, got {self.beta}")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "sigma", float(self.sigma))
        object.__setattr__(self, "beta", float(self.beta))
        object.__setattr__(self, "N1", n1)
        if 2 * self.m > n1 / 8:
            warnings.warn(
                f"2m = {2 * self.m} exceeds N1/8 = {n1 / 8}", WideWindowWarning, stacklevel=3
            )


# pass-band transform values below this fraction of phi_hat(0) count as zero
POSITIVITY_FLOOR = 1e-12

# Gauss-Legendre rule shared by all quadratures
_GL_NODES, _GL_WEIGHTS = leggauss(16)


def _semicircle(u):
    """``sqrt(1 - u^2)`` on ``|u| < 1`` and a mask of those points."""
    au = np.abs(u)
    inside = au < 1.0
    s = np.sqrt(np.where(inside, (1.0 - au) * (1.0 + au), 0.0))
    return s, inside


def _sinh_ratio(beta, s):
    """``sinh(beta s) / sinh(beta)`` without overflow."""
    return np.exp(beta * (s - 1.0)) * np.expm1(-2.0 * beta * s) / math.expm1(-2.0 * beta)


def _expm1_ratio(beta, s):
    """``(exp(beta s) - 1) / (exp(beta) - 1)`` without overflow; exactly 1 at ``s = 1``."""
    return np.exp(beta * (s - 1.0)) * np.expm1(-beta * s) / math.expm1(-beta)


class Window:
    """A window kind together with its parameters.

    Parameters
    ----------
    kind : Kind or str
        One of the names in :class:`Kind`.
    params : WindowParams
        Truncation, oversampling and shape parameters.
    b : float, optional
        Spline half-order of the modified B-spline window, a half-integer in
        ``[3/2, 8]``. Required for that kind and rejected for the others.
    """

    def __init__(self, kind, params: WindowParams, b: float | None = None):
        self.kind = Kind(kind)
        self.params = params
        if self.kind is Kind.MBSPLINE:
            if b is None:
                raise ValueError("the modified B-spline window needs b")
            b = float(b)
            if 2 * b != int(2 * b) or b < 1.5 or b > 8:
                raise ValueError(f"b must be a half-integer in [3/2, 8], got {b}")
            s, m, n1 = params.sigma, params.m, params.N1
            if 2 * s * b < 3 or b == m or not m < 2 * s * b:
                raise ValueError(f"b={b} violates 2 sigma b >= 3, b != m, m < 2 sigma b")
            if n1 * b != int(n1 * b) or int(n1 * b) % 2:
                raise ValueError(f"N1*b must be an even integer, got {n1 * b}")
        elif b is not None:
            raise ValueError(f"b only applies to mbspline, not {self.kind.value}")
        self.b = b
        p = self.params
        if self.kind is Kind.BSPLINE:
            self._m0 = float(specfun.cardinal_bspline(2 * p.m, 0.0))
        elif self.kind is Kind.MBSPLINE:
            self._m0 = float(specfun.cardinal_bspline(int(2 * b), 0.0))

    def __repr__(self):
        extra = f", b={self.b}" if self.b is not None else ""
        p = self.params
        return (
            f"Window({self.kind.value!r}, m={p.m}, sigma={p.sigma}, N={p.N}, "
            f"beta={p.beta}{extra})"
        )

    # ------------------------------------------------------------------ geometry
    @property
    def support(self) -> float:
        """Half-width ``m/N1`` of the support."""
        return self.params.m / self.params.N1

    @property
    def grid_length(self) -> int:
        """Length of the oversampled grid: ``N1``, or ``N1*b`` for mbspline."""
        if self.kind is Kind.MBSPLINE:
            return int(self.params.N1 * self.b)
        return self.params.N1

    @property
    def support_points(self) -> int:
        """Support half-width in grid steps, rounded up.

        Fractional for the modified B-spline when ``m * b`` is not an integer.
        """
        return int(math.ceil(self.support * self.grid_length - 1e-9))

    # ------------------------------------------------------------------ profile
    def profile(self, u):
        """Unscaled profile ``phi0(u)``, supported on ``[-1, 1]``."""
        u, scalar = specfun._as_array(u)
        kind, p = self.kind, self.params
        if kind is Kind.BSPLINE:
            out = specfun.cardinal_bspline(2 * p.m, p.m * u) / self._m0
        elif kind is Kind.MBSPLINE:
            out = specfun.cardinal_bspline(int(2 * self.b), self.b * u) / self._m0
        elif kind is Kind.TRIANGULAR:
            out = np.maximum(0.0, 1.0 - np.abs(u))
        else:
            s, inside = _semicircle(u)
            out = np.zeros_like(u)
            si = s[inside]
            if kind.is_modified:
                # edge_weight is phi0 * s; divide it back out
                out[inside] = self._edge_weight(si) / si
            else:
                out[inside] = self._semicircle_profile(si)
        return out[()] if scalar else out

    def _semicircle_profile(self, s):
        beta, kind = self.params.beta, self.kind
        if kind is Kind.ALGEBRAIC:
            return s ** (2.0 * beta - 1.0)
        if kind is Kind.BESSEL:
            return s * s * specfun.bessel_i(2, beta * s) / specfun.bessel_i(2, beta)
        if kind is Kind.SINH:
            return _sinh_ratio(beta, s)
        if kind is Kind.EXP:
            return _expm1_ratio(beta, s)
        if kind is Kind.COSH:
            return _sinh_ratio(beta / 2.0, s) ** 2
        raise AssertionError(kind)

    def _edge_weight(self, s):
        """``phi0(u) * sqrt(1 - u^2)`` as a function of ``s = sqrt(1 - u^2)``.

        Smooth in ``s`` for every semicircle kind, which makes the
        ``u = sin(theta)`` quadrature rapidly convergent.
        """
        beta, kind = self.params.beta, self.kind
        if kind is Kind.MCOSH:
            return _sinh_ratio(beta / 2.0, s) ** 2
        if kind is Kind.MEXP:
            return _expm1_ratio(beta, s)
        if kind is Kind.MSINH:
            return _sinh_ratio(beta, s)
        return s * self._semicircle_profile(s)

    # ------------------------------------------------------------------ space
    def eval(self, x):
        """Window value ``phi(x)``; zero for ``|x| >= m/N1``."""
        x, scalar = specfun._as_array(x)
        u = x / self.support
        out = np.zeros_like(u)
        inside = np.abs(u) < 1.0
        out[inside] = self.profile(u[inside])
        return out[()] if scalar else out

    def periodization_eval(self, x):
        """One-periodic ``sum_k phi(x + k)``; a single term is nonzero."""
        x, scalar = specfun._as_array(x)
        y = x - np.floor(x + 0.5)
        out = self.eval(y)
        return out[()] if scalar else out

    # ------------------------------------------------------------------ frequency
    def unscaled_ft(self, v):
        """Fourier transform ``phi0_hat(v)`` of the unscaled profile.

        Closed forms where known, Gauss-Legendre quadrature otherwise.
        """
        if not self.kind.has_analytic_ft:
            return self.unscaled_ft_numeric(v)
        v, scalar = specfun._as_array(v)
        av = np.abs(v)
        kind, beta = self.kind, self.params.beta
        if kind is Kind.BSPLINE:
            m = self.params.m
            out = specfun.sinc(np.pi * av / m) ** (2 * m) / (m * self._m0)
        elif kind is Kind.MBSPLINE:
            b = self.b
            out = specfun.sinc(np.pi * av / b) ** int(2 * b) / (b * self._m0)
        elif kind is Kind.TRIANGULAR:
            out = specfun.sinc(np.pi * av) ** 2
        elif kind is Kind.ALGEBRAIC:
            pref = math.exp(0.5 * math.log(math.pi) + math.lgamma(beta + 0.5))
            out = pref * specfun.bessel_j_scaled(beta, 2.0 * np.pi * av)
        elif kind is Kind.BESSEL:
            w = 2.0 * np.pi * av
            out = np.empty_like(w)
            lo = w <= beta
            z = np.sqrt(np.abs(beta * beta - w * w))
            out[lo] = specfun.spherical_i2_over_square(z[lo])
            out[~lo] = specfun.spherical_j2_over_square(z[~lo])
            out *= 2.0 * beta * beta / specfun.bessel_i(2, beta)
        else:  # MCOSH
            w = 2.0 * np.pi * av
            z = np.sqrt(np.abs(beta * beta - w * w))
            lo = w < beta
            hi = w > beta
            out = np.empty_like(w)
            j0w = specfun.bessel_j(0, w)
            out[lo] = specfun.bessel_i(0, z[lo]) - j0w[lo]
            out[hi] = specfun.bessel_j(0, z[hi]) - j0w[hi]
            seam = ~(lo | hi)
            out[seam] = 1.0 - j0w[seam]
            out *= math.pi / (2.0 * math.sinh(0.5 * beta) ** 2)
        return out[()] if scalar else out

    def unscaled_ft_numeric(self, v):
        """``2 * int_0^1 phi0(u) cos(2 pi u v) du`` by composite Gauss-Legendre.

        Panels hold at most about one oscillation of the cosine, so the cost
        grows linearly with ``|v|``.
        """
        v, scalar = specfun._as_array(v)
        av = np.abs(v).ravel()
        out = np.empty_like(av)
        breaks = None if self.kind.is_semicircle else self._spline_knots()
        # |v| oscillations over the interval in either variable; counts are
        # rounded up to a geometric ladder so large batches share node sets
        need = np.ceil(av) + 8
        panels = np.ceil(8 * 1.25 ** np.ceil(np.log(need / 8) / math.log(1.25) - 1e-9)).astype(int)
        for count in np.unique(panels):
            sel = panels == count
            nodes, weights = self._quadrature_rule(int(count), breaks)
            out[sel] = self._integrate(av[sel], nodes, weights)
        out = out.reshape(np.shape(v))
        return out[()] if scalar else out

    def _spline_knots(self):
        if self.kind is Kind.TRIANGULAR:
            return np.array([0.0, 1.0])
        if self.kind is Kind.BSPLINE:
            order, scale = 2 * self.params.m, self.params.m
        else:
            order, scale = int(2 * self.b), self.b
        knots = -order / 2.0 + np.arange(order + 1)
        knots = knots[knots >= 0] / scale
        return np.unique(np.concatenate([[0.0], knots, [1.0]]))

    def _quadrature_rule(self, count, breaks):
        """Nodes in ``u`` and weights of the integrand on ``[0, 1]``."""
        if breaks is None:
            edges = np.linspace(0.0, 0.5 * np.pi, count + 1)
        else:
            # subdivide every knot interval to keep the oscillation resolved
            per = max(1, int(math.ceil(count / (len(breaks) - 1))))
            edges = np.unique(
                np.concatenate(
                    [np.linspace(a, c, per + 1) for a, c in zip(breaks[:-1], breaks[1:])]
                )
            )
        lo, hi = edges[:-1, None], edges[1:, None]
        t = (0.5 * (hi - lo) * (_GL_NODES + 1.0) + lo).ravel()
        w = (0.5 * (hi - lo) * _GL_WEIGHTS).ravel()
        if breaks is None:
            u = np.sin(t)
            weights = w * self._edge_weight(np.cos(t))
        else:
            u = t
            weights = w * self.profile(t)
        return u, weights

    @staticmethod
    def _integrate(v, nodes, weights, chunk=4096):
        out = np.empty_like(v)
        for i in range(0, len(v), chunk):
            vv = v[i:i + chunk]
            out[i:i + chunk] = 2.0 * (np.cos(2.0 * np.pi * np.outer(vv, nodes)) @ weights)
        return out

    def fourier_transform(self, v):
        """``phi_hat(v) = (m/N1) phi0_hat(m v / N1)``."""
        a = self.support
        return a * self.unscaled_ft(a * np.asarray(v, dtype=float))

    def fourier_transform_numeric(self, v):
        """Quadrature value of ``phi_hat(v)``, independent of the closed forms."""
        a = self.support
        return a * self.unscaled_ft_numeric(a * np.asarray(v, dtype=float))

    def fourier_coefficient(self, k):
        """``c_k`` of the periodized window, which equals ``phi_hat(k)``.

        Raises
        ------
        NonpositiveCoefficient
            If some requested ``k`` in ``[-N/2, N/2 - 1]`` has ``c_k <= 0``.
        """
        k = np.asarray(k)
        if not np.all(k == np.round(k)):
            raise ValueError("Fourier coefficient index must be an integer")
        c = self.fourier_transform(k)
        half = self.params.N // 2
        band = (k >= -half) & (k < half)
        self.check_positive(np.asarray(k)[band], np.asarray(c)[band])
        return c

    def check_positive(self, k, values):
        """Raise :class:`NonpositiveCoefficient` unless every value is positive.

        Values below ``1e-12 * phi_hat(0)`` count as zero: they are within
        rounding of a true zero of the transform.
        """
        values = np.atleast_1d(values)
        floor = POSITIVITY_FLOOR * float(self.fourier_transform(0.0))
        bad = ~(values > floor)
        if np.any(bad):
            first = int(np.atleast_1d(k)[bad][0])
            raise NonpositiveCoefficient(
                f"{self!r} has phi_hat({first}) = {values[bad][0]:.3g}, not positive"
            )


def default_b(m: int, sigma: float, N: int) -> float:
    """Smallest admissible modified B-spline order for ``(m, sigma, N)``.

    Admissible means a half-integer in ``[3/2, 8]`` with ``2 sigma b >= 3``,
    ``b != m``, ``m < 2 sigma b`` and ``sigma N b`` an even integer.
    """
    n1 = sigma * N
    for twice in range(3, 17):
        b = twice / 2.0
        nb = n1 * b
        if (2 * sigma * b >= 3 and b != m and m < 2 * sigma * b
                and abs(nb - round(nb)) < 1e-9 and round(nb) % 2 == 0):
            return b
    raise ValueError(f"no admissible b for m={m}, sigma={sigma}, N={N}")


def make_window(kind, m: int, sigma: float, N: int, beta: float | None = None,
                b: float | None = None) -> Window:
    """Build a window with the default shape parameter of its kind.

    The algebraic window defaults to ``beta = 3m``; every other kind to
    :func:`default_beta`. ``beta`` overrides either default. The modified
    B-spline takes ``b`` from :func:`default_b` when it is not given.
    """
    kind = Kind(kind)
    if kind is Kind.MBSPLINE and b is None:
        b = default_b(m, sigma, N)
    if beta is None:
        beta = 3.0 * m if kind is Kind.ALGEBRAIC else default_beta(m, sigma)
    return Window(kind, WindowParams(m, sigma, N, beta), b=b)
