"""Command-line front end.

Subcommands
-----------
constants   measured error constants as CSV
bounds      theoretical bounds as CSV
transform   forward NFFT of a coefficient file at a node file
adjoint     adjoint NFFT of a value file at a node file
verify      measured constants against the proven bounds
figures     the two families of constant tables, one file per sigma

Exit codes: 0 ok, 2 configuration or I/O error, 3 nonpositive pass-band
coefficient, 4 transform error above its budget, 5 bound violated.
"""

from __future__ import annotations

import argparse
import io
import sys
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import analysis
from .analysis import bound_is_proxy, mcosh_bound_minus_variant, theoretical_bound
from .transform import (
    NfftPlan,
    format_number,
    ndft_adjoint,
    ndft_forward,
    nfft_adjoint,
    nfft_forward,
    read_coeffs_csv,
    read_nodes_csv,
    read_values_csv,
    within_budget,
    write_indexed_csv,
)
from .windows import Kind, NonpositiveCoefficient, WideWindowWarning, make_window

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NONPOSITIVE = 3
EXIT_BUDGET = 4
EXIT_BOUND = 5

DEFAULT_SIGMAS = (1.25, 1.5, 2.0)
FIG1_KINDS = (Kind.BSPLINE, Kind.ALGEBRAIC, Kind.BESSEL, Kind.SINH, Kind.MCOSH)
SINH_FAMILY = (Kind.SINH, Kind.EXP, Kind.COSH)
MODIFIED_FAMILY = (Kind.MCOSH, Kind.MEXP, Kind.MSINH)
BOUNDED_KINDS = (
    Kind.BSPLINE, Kind.MBSPLINE, Kind.ALGEBRAIC, Kind.BESSEL, Kind.SINH, Kind.MCOSH,
    Kind.EXP, Kind.COSH, Kind.MEXP, Kind.MSINH,
)

CONSTANTS_HEADER = (
    "window,m,sigma,N,beta,method,e_measured_lower,e_measured_upper,r_max,grid"
)


class ConfigError(ValueError):
    """Invalid command-line configuration."""


@dataclass
class RunConfig:
    """Validated command-line settings."""

    command: str
    windows: list[Kind]
    ms: list[int]
    sigmas: list[float]
    N: int | None
    beta_override: float | None
    b: float | None
    tol: float
    grid: int
    rmax_cap: int
    method: str
    check: bool
    in_coeffs: Path | None
    in_nodes: Path | None
    in_values: Path | None
    out: Path | None


# --------------------------------------------------------------------- parsing


def parse_m(text: str) -> list[int]:
    """``"4"`` or an inclusive range ``"2..6"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ConfigError(f"empty m range {text!r}")
            values = list(range(lo, hi + 1))
        else:
            values = [int(text)]
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"cannot parse m {text!r}; use 4 or 2..6") from None
    if values[0] < 2:
        raise ConfigError(f"m must be at least 2, got {values[0]}")
    return values


def parse_sigmas(text: str) -> list[float]:
    try:
        values = [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ConfigError(f"cannot parse sigma list {text!r}") from None
    if not values:
        raise ConfigError("empty sigma list")
    return values


def parse_windows(text: str) -> list[Kind]:
    out = []
    for name in text.split(","):
        name = name.strip()
        try:
            out.append(Kind(name))
        except ValueError:
            names = ", ".join(k.value for k in Kind)
            raise ConfigError(f"unknown window {name!r}; choose from {names}") from None
    return out


def _is_power_of_two(n: int) -> bool:
    return n >= 2 and n & (n - 1) == 0


def build_config(ns: argparse.Namespace) -> RunConfig:
    cmd = ns.command
    if ns.window is None:
        if cmd == "verify":
            windows = list(BOUNDED_KINDS)
        elif cmd in ("figures",):
            windows = []
        elif cmd == "bounds":
            windows = list(BOUNDED_KINDS)
        else:
            raise ConfigError(f"{cmd} needs --window")
    else:
        windows = parse_windows(ns.window)
    single = cmd in ("transform", "adjoint")
    ms = parse_m(ns.m if ns.m is not None else ("4" if single else "2..6"))
    if ns.sigma is not None:
        sigmas = parse_sigmas(ns.sigma)
    else:
        sigmas = [2.0] if single else list(DEFAULT_SIGMAS)
    if not ns.allow_any_sigma:
        bad = [s for s in sigmas if s not in DEFAULT_SIGMAS]
        if bad:
            raise ConfigError(
                f"sigma {bad[0]} not in {{1.25, 1.5, 2}}; pass --allow-any-sigma to override"
            )
    if single and (len(windows) != 1 or len(ms) != 1 or len(sigmas) != 1):
        raise ConfigError(f"{cmd} takes a single window, m and sigma")
    N = ns.N
    if N is None and cmd in ("constants", "verify", "figures"):
        N = 1024
    if N is not None and not _is_power_of_two(N):
        raise ConfigError(f"N must be a power of two >= 2, got {N}")
    if cmd == "adjoint" and N is None:
        raise ConfigError("adjoint needs --N")
    if not ns.tol > 0:
        raise ConfigError(f"--tol must be positive, got {ns.tol}")
    if ns.grid < 16:
        raise ConfigError(f"--grid must be at least 16, got {ns.grid}")
    if ns.rmax_cap < 1:
        raise ConfigError(f"--rmax-cap must be positive, got {ns.rmax_cap}")
    for flag, needed in (("--in-coeffs", cmd == "transform"), ("--in-nodes", single),
                         ("--in-values", cmd == "adjoint")):
        if needed and getattr(ns, flag[2:].replace("-", "_")) is None:
            raise ConfigError(f"{cmd} needs {flag}")
    return RunConfig(
        command=cmd, windows=windows, ms=ms, sigmas=sigmas, N=N,
        beta_override=ns.beta_override, b=ns.b, tol=ns.tol, grid=ns.grid,
        rmax_cap=ns.rmax_cap, method=ns.method, check=ns.check,
        in_coeffs=ns.in_coeffs, in_nodes=ns.in_nodes, in_values=ns.in_values, out=ns.out,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compact-nfft",
        description="NFFT with compactly supported windows and their error constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "constants": "measure error constants",
        "bounds": "evaluate theoretical bounds",
        "transform": "forward NFFT of a coefficient file",
        "adjoint": "adjoint NFFT of a value file",
        "verify": "compare measured constants with the bounds",
        "figures": "write the constant tables for each sigma",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--window", "--kind", dest="window",
                       help="window kind, or a comma list for sweeps")
        p.add_argument("--m", help="truncation parameter: 4 or a range 2..6")
        p.add_argument("--sigma", help="oversampling factor or comma list")
        p.add_argument("--N", type=int, help="polynomial order, a power of two")
        p.add_argument("--beta-override", type=float, help="shape parameter to use instead of the default")
        p.add_argument("--b", type=float, help="order of the modified B-spline (half-integer)")
        p.add_argument("--tol", type=float, default=1e-12, help="aliasing tail target (default 1e-12)")
        p.add_argument("--grid", type=int, default=4096, help="smallest FFT grid for the sup search")
        p.add_argument("--rmax-cap", type=int, default=10 ** 6, help="largest alias radius")
        p.add_argument("--in-coeffs", type=Path, help="CSV of k,re,im")
        p.add_argument("--in-nodes", type=Path, help="CSV with one node per line")
        p.add_argument("--in-values", type=Path, help="CSV of j,re,im")
        p.add_argument("--out", type=Path, help="output file (directory for figures)")
        p.add_argument("--check", action="store_true", help="compare with the direct sum")
        p.add_argument("--method", choices=("aliasing", "periodization", "both"),
                       default="periodization", help="how constants are measured")
        p.add_argument("--allow-any-sigma", action="store_true",
                       help="accept sigma outside {1.25, 1.5, 2}")
    return parser


# --------------------------------------------------------------------- helpers


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if x is None:
        return ""
    if isinstance(x, str):
        return x
    return format_number(x)


def _emit(cfg_out: Path | None, text: str, stdout) -> None:
    if cfg_out is None:
        stdout.write(text)
    else:
        cfg_out.write_text(text)


def _window(cfg: RunConfig, kind: Kind, m: int, sigma: float, N: int):
    b = cfg.b if kind is Kind.MBSPLINE else None
    return make_window(kind, m, sigma, N, beta=cfg.beta_override, b=b)


def _measure(cfg: RunConfig, w, method: str):
    if method == "aliasing":
        return analysis.error_constant_aliasing(w, tol=cfg.tol, rmax_cap=cfg.rmax_cap,
                                                grid=cfg.grid)
    return analysis.error_constant_periodization(w)


def _methods(cfg: RunConfig) -> list[str]:
    return ["aliasing", "periodization"] if cfg.method == "both" else [cfg.method]


def constant_rows(cfg: RunConfig, kinds, ms, sigmas, N) -> list[tuple]:
    """Measured constants as sortable tuples ``(kind, m, sigma, method, result)``."""
    rows = []
    for kind in kinds:
        for m in ms:
            for sigma in sigmas:
                w = _window(cfg, kind, m, sigma, N)
                for method in _methods(cfg):
                    rows.append((kind.value, m, sigma, method, _measure(cfg, w, method)))
    rows.sort(key=lambda r: r[:4])
    return rows


# --------------------------------------------------------------------- commands


def cmd_constants(cfg: RunConfig, stdout) -> int:
    rows = constant_rows(cfg, cfg.windows, cfg.ms, cfg.sigmas, cfg.N)
    lines = [CONSTANTS_HEADER]
    for kind, m, sigma, method, res in rows:
        lines.append(",".join(_fmt(v) for v in (
            kind, m, sigma, res.N, res.beta, method, res.lower, res.value, res.r_max, res.grid,
        )))
    _emit(cfg.out, "\n".join(lines) + "\n", stdout)
    return EXIT_OK


def cmd_bounds(cfg: RunConfig, stdout) -> int:
    lines = ["window,m,sigma,bound,proxy,bound_minus_variant"]
    rows = []
    for kind in cfg.windows:
        for m in cfg.ms:
            for sigma in cfg.sigmas:
                b = None
                if kind is Kind.MBSPLINE:
                    b = cfg.b if cfg.b is not None else _default_b(m, sigma, cfg.N)
                bound = theoretical_bound(kind, m, sigma, b=b)
                minus = mcosh_bound_minus_variant(m, sigma) if kind is Kind.MCOSH else None
                rows.append((kind.value, m, sigma, bound, bound_is_proxy(kind), minus))
    rows.sort(key=lambda r: r[:3])
    for r in rows:
        lines.append(",".join(_fmt(v) for v in r))
    _emit(cfg.out, "\n".join(lines) + "\n", stdout)
    return EXIT_OK


def _default_b(m, sigma, N):
    from .windows import default_b

    return default_b(m, sigma, N if N is not None else 1024)


def cmd_transform(cfg: RunConfig, stdout, stderr) -> int:
    poly = read_coeffs_csv(cfg.in_coeffs, N=cfg.N)
    nodes = read_nodes_csv(cfg.in_nodes)
    w = _window(cfg, cfg.windows[0], cfg.ms[0], cfg.sigmas[0], poly.N)
    plan = NfftPlan(w, nodes)
    values = nfft_forward(plan, poly)
    buf = io.StringIO()
    write_indexed_csv(buf, range(nodes.M), values, header="j")
    _emit(cfg.out, buf.getvalue(), stdout)
    if not cfg.check:
        return EXIT_OK
    exact = ndft_forward(poly, nodes)
    err = float(np.max(np.abs(values - exact)))
    e = _measure(cfg, w, cfg.method if cfg.method != "both" else "periodization").value
    size = float(np.sum(np.abs(poly.coeffs)))
    return _report_budget(err, e, size, "wiener_norm", stderr)


def cmd_adjoint(cfg: RunConfig, stdout, stderr) -> int:
    nodes = read_nodes_csv(cfg.in_nodes)
    values = read_values_csv(cfg.in_values, M=nodes.M)
    w = _window(cfg, cfg.windows[0], cfg.ms[0], cfg.sigmas[0], cfg.N)
    plan = NfftPlan(w, nodes)
    coeffs = nfft_adjoint(plan, values)
    buf = io.StringIO()
    write_indexed_csv(buf, np.arange(-cfg.N // 2, cfg.N // 2), coeffs, header="k")
    _emit(cfg.out, buf.getvalue(), stdout)
    if not cfg.check:
        return EXIT_OK
    exact = ndft_adjoint(values, nodes, cfg.N)
    err = float(np.max(np.abs(coeffs - exact)))
    e = _measure(cfg, w, cfg.method if cfg.method != "both" else "periodization").value
    size = float(np.sum(np.abs(values)))
    return _report_budget(err, e, size, "l1_norm", stderr)


def _report_budget(err, e, size, size_name, stderr) -> int:
    ok = within_budget(err, e, size)
    stderr.write(
        f"max_error={format_number(err)} e_constant={format_number(e)} "
        f"{size_name}={format_number(size)} budget={format_number(e * size)} "
        f"{'ok' if ok else 'VIOLATED'}\n"
    )
    return EXIT_OK if ok else EXIT_BUDGET


def cmd_verify(cfg: RunConfig, stdout) -> int:
    rows = []
    for kind in cfg.windows:
        for m in cfg.ms:
            for sigma in cfg.sigmas:
                b = None
                if kind is Kind.MBSPLINE:
                    b = cfg.b if cfg.b is not None else _default_b(m, sigma, cfg.N)
                bound = theoretical_bound(kind, m, sigma, b=b)
                w = make_window(kind, m, sigma, cfg.N, beta=cfg.beta_override, b=b)
                measured = max(_measure(cfg, w, method).value for method in _methods(cfg))
                ok = measured <= bound * (1.0 + 1e-9)
                rows.append((kind.value, m, sigma, cfg.N, measured, bound, ok, bound_is_proxy(kind)))
    rows.sort(key=lambda r: r[:3])
    lines = ["window,m,sigma,N,measured,bound,ok,proxy"]
    lines += [",".join(_fmt(v) for v in r) for r in rows]
    _emit(cfg.out, "\n".join(lines) + "\n", stdout)
    failed = [r for r in rows if not r[6] and not r[7]]
    return EXIT_BOUND if failed else EXIT_OK


def _sigma_tag(sigma: float) -> str:
    return format(sigma, "g")


def figure_tables(cfg: RunConfig, sigma: float) -> tuple[str, str]:
    """Text of the two tables for one ``sigma``."""
    ms = cfg.ms
    N = cfg.N
    fig1 = ["window,m,sigma,N,method,e_measured_lower,e_measured_upper"]
    for kind, m, s, method, res in constant_rows(cfg, FIG1_KINDS, ms, [sigma], N):
        fig1.append(",".join(_fmt(v) for v in (kind, m, s, N, method, res.lower, res.value)))

    fig2 = []
    for family, kinds in (("modified_family", MODIFIED_FAMILY), ("sinh_family", SINH_FAMILY)):
        for kind, m, s, method, res in constant_rows(cfg, kinds, ms, [sigma], N):
            fig2.append((family, kind, m, method, res.lower, res.value))
    for m in ms:
        sinh_b = theoretical_bound(Kind.SINH, m, sigma)
        mcosh_b = theoretical_bound(Kind.MCOSH, m, sigma)
        fig2.append(("bound_mcosh", "mcosh", m, "theorem", mcosh_b, mcosh_b))
        fig2.append(("bound_sinh", "sinh", m, "theorem", sinh_b, sinh_b))
    fig2.sort(key=lambda r: r[:4])
    lines = ["series,window,m,sigma,N,method,value_lower,value_upper"]
    for series, kind, m, method, lo, hi in fig2:
        lines.append(",".join(_fmt(v) for v in (series, kind, m, sigma, N, method, lo, hi)))
    return "\n".join(fig1) + "\n", "\n".join(lines) + "\n"


def cmd_figures(cfg: RunConfig, stdout) -> int:
    outdir = cfg.out if cfg.out is not None else Path(".")
    outdir.mkdir(parents=True, exist_ok=True)
    for sigma in cfg.sigmas:
        t1, t2 = figure_tables(cfg, sigma)
        tag = _sigma_tag(sigma)
        (outdir / f"fig1_{tag}.csv").write_text(t1)
        (outdir / f"fig2_{tag}.csv").write_text(t2)
        stdout.write(f"wrote {outdir / f'fig1_{tag}.csv'} and {outdir / f'fig2_{tag}.csv'}\n")
    return EXIT_OK


# --------------------------------------------------------------------- entry


def run(argv=None, stdout=None, stderr=None) -> int:
    """Run the command line and return its exit code."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_CONFIG
    try:
        cfg = build_config(ns)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", WideWindowWarning)
            if cfg.command == "constants":
                return cmd_constants(cfg, stdout)
            if cfg.command == "bounds":
                return cmd_bounds(cfg, stdout)
            if cfg.command == "transform":
                return cmd_transform(cfg, stdout, stderr)
            if cfg.command == "adjoint":
                return cmd_adjoint(cfg, stdout, stderr)
            if cfg.command == "verify":
                return cmd_verify(cfg, stdout)
            return cmd_figures(cfg, stdout)
    except NonpositiveCoefficient as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_NONPOSITIVE
    except (ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
