"""Forward and adjoint NFFT, direct NDFT oracles and small helpers.

Coefficient vectors use natural order ``k = -N/2, ..., N/2 - 1`` at the API.
Internally the oversampled grid is kept in DFT order so no shuffles are
needed around the FFT.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import specfun
from .windows import Window

__all__ = [
    "PlanMismatch",
    "TrigPolynomial",
    "NodeSet",
    "NfftPlan",
    "fft_complex",
    "ndft_forward",
    "nfft_forward",
    "ndft_adjoint",
    "nfft_adjoint",
    "wiener_norm",
    "sobolev_bound_factor",
    "within_budget",
    "ROUNDOFF_ALLOWANCE",
    "read_nodes_csv",
    "read_coeffs_csv",
    "read_values_csv",
    "write_indexed_csv",
    "format_number",
]


class PlanMismatch(ValueError):
    """Input sizes do not match the plan."""


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def fft_complex(data, direction: str = "forward", any_length: bool = False):
    """Unnormalized DFT along the last axis.

    ``forward``: ``X_k = sum_l x_l exp(-2 pi i k l / L)``.
    ``inverse``: ``x_l = sum_k X_k exp(+2 pi i k l / L)``, no ``1/L``.

    The length must be a power of two unless ``any_length`` is set, which
    oversampling factors such as 1.25 and 1.5 need (``N1 = 5 * 2^k`` or
    ``3 * 2^k``).
    """
    data = np.asarray(data, dtype=complex)
    n = data.shape[-1]
    if n < 1 or not (any_length or _is_power_of_two(n)):
        raise ValueError(f"FFT length must be a power of two, got {n}")
    if direction == "forward":
        return np.fft.fft(data, axis=-1)
    if direction == "inverse":
        return np.fft.ifft(data, axis=-1, norm="forward")
    raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")


@dataclass(frozen=True)
class TrigPolynomial:
    """``f(x) = sum_{k=-N/2}^{N/2-1} c_k exp(2 pi i k x)``.

    ``coeffs[i]`` holds ``c_{i - N/2}``.
    """

    N: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex)
        if int(self.N) != self.N or self.N < 2 or self.N % 2:
            raise ValueError(f"N must be an even integer >= 2, got {self.N}")
        if c.shape != (self.N,):
            raise ValueError(f"expected {self.N} coefficients, got shape {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "N", int(self.N))

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(-self.N // 2, self.N // 2)

    @classmethod
    def zeros(cls, N: int) -> "TrigPolynomial":
        return cls(N, np.zeros(N, dtype=complex))

    @classmethod
    def monomial(cls, N: int, k: int, value: complex = 1.0) -> "TrigPolynomial":
        c = np.zeros(N, dtype=complex)
        c[k + N // 2] = value
        return cls(N, c)


@dataclass(frozen=True)
class NodeSet:
    """Nonequispaced nodes ``x_j`` in ``[-1/2, 1/2)``."""

    nodes: np.ndarray

    def __post_init__(self):
        x = np.array(self.nodes, dtype=float).ravel()
        if not np.all(np.isfinite(x)):
            raise ValueError("nodes must be finite")
        bad = np.flatnonzero((x < -0.5) | (x >= 0.5))
        if bad.size:
            raise ValueError(f"node {bad[0]} = {x[bad[0]]!r} lies outside [-1/2, 1/2)")
        x.setflags(write=False)
        object.__setattr__(self, "nodes", x)

    @property
    def M(self) -> int:
        return self.nodes.size


class NfftPlan:
    """Precomputed state for applying the NFFT with one window and node set.

    Attributes
    ----------
    inv_coeffs : ndarray
        ``1 / c_k`` of the periodized window for ``k = -N/2, ..., N/2 - 1``.
    gather_index : ndarray of int, shape (M, 2s + 1)
        Grid indices (DFT order) within the window support of each node,
        where ``s`` is the support half-width in grid steps.
    gather_values : ndarray, shape (M, 2s + 1)
        The matching values ``phi~(x_j - l/L)``.
    """

    def __init__(self, window: Window, nodes: NodeSet):
        self.window = window
        self.nodes = nodes
        self.N = window.params.N
        self.L = window.grid_length
        k = np.arange(-self.N // 2, self.N // 2)
        coeffs = window.fourier_coefficient(k)
        self.inv_coeffs = 1.0 / coeffs
        self.inv_coeffs.setflags(write=False)
        s = window.support_points
        # grid points l with |x - l/L| <= s/L, endpoints included
        first = np.ceil(nodes.nodes * self.L - s).astype(int)
        offsets = np.arange(2 * s + 1)
        ell = first[:, None] + offsets
        # columns that fall outside the support carry the window value 0
        values = window.periodization_eval(nodes.nodes[:, None] - ell / self.L)
        self.gather_index = np.mod(ell, self.L)
        self.gather_values = values
        self.gather_index.setflags(write=False)
        self.gather_values.setflags(write=False)

    @property
    def M(self) -> int:
        return self.nodes.M

    def _dft_slots(self):
        """Positions of ``k in I_N`` (natural order) inside the length-L grid."""
        return np.mod(np.arange(-self.N // 2, self.N // 2), self.L)


def ndft_forward(poly: TrigPolynomial, nodes: NodeSet, chunk: int = 2048):
    """Direct evaluation of ``f(x_j)`` in ``O(N M)`` operations."""
    k = poly.frequencies
    out = np.empty(nodes.M, dtype=complex)
    for i in range(0, nodes.M, chunk):
        x = nodes.nodes[i:i + chunk]
        out[i:i + chunk] = np.exp(2j * np.pi * np.outer(x, k)) @ poly.coeffs
    return out


def nfft_forward(plan: NfftPlan, poly: TrigPolynomial):
    """Approximate ``f(x_j)`` through the oversampled grid.

    Raises
    ------
    PlanMismatch
        If ``poly.N`` differs from the plan's ``N``.
    """
    if poly.N != plan.N:
        raise PlanMismatch(f"polynomial has N={poly.N}, plan has N={plan.N}")
    ghat = np.zeros(plan.L, dtype=complex)
    ghat[plan._dft_slots()] = poly.coeffs * plan.inv_coeffs
    g = fft_complex(ghat, "inverse", any_length=True) / plan.L
    return np.sum(g[plan.gather_index] * plan.gather_values, axis=1)


def ndft_adjoint(values, nodes: NodeSet, N: int, chunk: int = 2048):
    """Direct ``s_k = sum_j f_j exp(2 pi i k x_j)`` for ``k = -N/2, ..., N/2 - 1``."""
    f = np.asarray(values, dtype=complex)
    if f.shape != (nodes.M,):
        raise ValueError(f"expected {nodes.M} values, got shape {f.shape}")
    k = np.arange(-N // 2, N // 2)
    out = np.zeros(N, dtype=complex)
    for i in range(0, nodes.M, chunk):
        x = nodes.nodes[i:i + chunk]
        out += f[i:i + chunk] @ np.exp(2j * np.pi * np.outer(x, k))
    return out


def nfft_adjoint(plan: NfftPlan, values):
    """Approximate the exponential sums ``s_k`` by spreading onto the grid.

    Scattering uses ``np.bincount``, which accumulates in a fixed order, so
    the result is bitwise reproducible.
    """
    f = np.asarray(values, dtype=complex)
    if f.shape != (plan.M,):
        raise PlanMismatch(f"expected {plan.M} values, got shape {f.shape}")
    contrib = f[:, None] * plan.gather_values
    idx = plan.gather_index.ravel()
    h = np.bincount(idx, contrib.real.ravel(), plan.L) + 1j * np.bincount(
        idx, contrib.imag.ravel(), plan.L
    )
    spectrum = fft_complex(h, "inverse", any_length=True)
    return spectrum[plan._dft_slots()] * plan.inv_coeffs / plan.L


def wiener_norm(poly: TrigPolynomial) -> float:
    """``sum_k |c_k|``, the norm of the Wiener algebra."""
    return float(np.sum(np.abs(poly.coeffs)))


# absolute allowance, relative to the input size, for double rounding in
# both the fast and the direct sums
ROUNDOFF_ALLOWANCE = 1e-13


def within_budget(error: float, e_constant: float, size: float) -> bool:
    """True if ``error <= e_constant * size`` up to rounding.

    ``size`` is the Wiener norm of the polynomial (forward) or the l1 norm
    of the values (adjoint).
    """
    return error <= e_constant * size * (1.0 + 1e-9) + ROUNDOFF_ALLOWANCE * size


def sobolev_bound_factor(lam: float) -> float:
    """``sqrt(1 + 2 zeta(2 lam))``, bounding the Wiener norm by a Sobolev norm."""
    if not lam > 0.5:
        raise ValueError(f"lambda must exceed 1/2, got {lam}")
    return math.sqrt(1.0 + 2.0 * specfun.riemann_zeta(2.0 * lam))


# --------------------------------------------------------------------- CSV I/O


def format_number(x: float) -> str:
    """17 significant digits, enough to round-trip any double."""
    return format(float(x), ".17g")


def _rows(path):
    """Non-empty CSV rows with 1-based line numbers; a non-numeric first row is a header."""
    with open(Path(path), newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            row = [c.strip() for c in row]
            if not row or all(c == "" for c in row):
                continue
            yield lineno, row


def _parse_float(text, path, lineno):
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"{path}, line {lineno}: cannot parse {text!r} as a number") from None
    if not math.isfinite(value):
        raise ValueError(f"{path}, line {lineno}: value {text!r} is not finite")
    return value


def _is_header(row):
    try:
        float(row[0])
    except ValueError:
        return True
    return False


def read_nodes_csv(path) -> NodeSet:
    """One node per line (first column), optional header."""
    xs = []
    for i, (lineno, row) in enumerate(_rows(path)):
        if i == 0 and _is_header(row):
            continue
        x = _parse_float(row[0], path, lineno)
        if not -0.5 <= x < 0.5:
            raise ValueError(f"{path}, line {lineno}: node {x!r} lies outside [-1/2, 1/2)")
        xs.append(x)
    if not xs:
        raise ValueError(f"{path}: no nodes found")
    return NodeSet(np.array(xs))


def _read_indexed(path):
    items = []
    for i, (lineno, row) in enumerate(_rows(path)):
        if i == 0 and _is_header(row):
            continue
        if len(row) != 3:
            raise ValueError(f"{path}, line {lineno}: expected 3 columns 'index,re,im'")
        idx = _parse_float(row[0], path, lineno)
        if idx != int(idx):
            raise ValueError(f"{path}, line {lineno}: index {row[0]!r} is not an integer")
        re = _parse_float(row[1], path, lineno)
        im = _parse_float(row[2], path, lineno)
        items.append((lineno, int(idx), complex(re, im)))
    return items


def read_coeffs_csv(path, N: int | None = None) -> TrigPolynomial:
    """Lines ``k,re,im``; missing ``k`` are zero.

    Without ``N`` the smallest even order covering every ``k`` is used.
    """
    items = _read_indexed(path)
    if not items:
        raise ValueError(f"{path}: no coefficients found")
    if N is None:
        reach = max(max(-k, k + 1) for _, k, _ in items)
        N = 2 * max(reach, 1)
    coeffs = np.zeros(N, dtype=complex)
    seen = set()
    for lineno, k, c in items:
        if not -N // 2 <= k < N // 2:
            raise ValueError(f"{path}, line {lineno}: index {k} outside [-{N // 2}, {N // 2 - 1}]")
        if k in seen:
            raise ValueError(f"{path}, line {lineno}: duplicate index {k}")
        seen.add(k)
        coeffs[k + N // 2] = c
    return TrigPolynomial(N, coeffs)


def read_values_csv(path, M: int | None = None) -> np.ndarray:
    """Lines ``j,re,im`` with ``j = 0, ..., M-1`` (any order)."""
    items = _read_indexed(path)
    if not items:
        raise ValueError(f"{path}: no values found")
    size = M if M is not None else max(j for _, j, _ in items) + 1
    out = np.zeros(size, dtype=complex)
    seen = set()
    for lineno, j, c in items:
        if not 0 <= j < size:
            raise ValueError(f"{path}, line {lineno}: index {j} outside [0, {size - 1}]")
        if j in seen:
            raise ValueError(f"{path}, line {lineno}: duplicate index {j}")
        seen.add(j)
        out[j] = c
    if len(seen) != size:
        raise ValueError(f"{path}: expected {size} values, found {len(seen)}")
    return out


def write_indexed_csv(path_or_file, indices, values, header: str = "j") -> None:
    """Write ``index,re,im`` rows; ``path_or_file`` may be an open text stream."""
    lines = [f"{header},re,im"]
    for i, v in zip(indices, values):
        v = complex(v)
        lines.append(f"{int(i)},{format_number(v.real)},{format_number(v.imag)}")
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        Path(path_or_file).write_text(text)
