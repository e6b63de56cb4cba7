import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compact_nfft import specfun
from compact_nfft.analysis import (
    DecayProfile,
    error_constant_aliasing,
    error_constant_periodization,
    general_bound_from_profile,
    kaiser_bessel_reference,
    mcosh_bound_minus_variant,
    proof_profile,
    tail_bound,
    theoretical_bound,
    bound_is_proxy,
    verify_bound,
)
from compact_nfft.windows import Kind, NonpositiveCoefficient, make_window
from conftest import ANALYTIC_KINDS

# ------------------------------------------------------------------ tail bound


@pytest.mark.parametrize("u, mu, expected", [(0, 2, 2.0), (0.5, 3, 4.0), (0, 4, 2 / 3)])
def test_tail_bound_values(u, mu, expected):
    assert tail_bound(u, mu, 1.0) == pytest.approx(expected, rel=1e-15)


def test_tail_bound_dominates_zeta_sum():
    exact = 2 * (math.pi ** 4 / 90 - 1)
    assert exact == pytest.approx(0.1646, abs=1e-4)
    assert tail_bound(0, 4) > exact


@pytest.mark.parametrize("u, mu", [(1.0, 2), (-1.0, 2), (1.5, 2), (0.2, 1.0), (0.2, 0.5)])
def test_tail_bound_rejects(u, mu):
    with pytest.raises(ValueError):
        tail_bound(u, mu)


@settings(max_examples=60, deadline=None)
@given(
    st.floats(min_value=-0.99, max_value=0.99),
    st.floats(min_value=1.2, max_value=8.0),
    st.integers(min_value=1, max_value=20),
)
def test_tail_bound_holds(u, mu, r_max):
    # sum_{|r| > r_max} |u + r|^-mu as two Hurwitz zeta values
    with mp.workdps(30):
        total = mp.zeta(mu, r_max + 1 + u) + mp.zeta(mu, r_max + 1 - u)
    assert float(total) <= tail_bound(u, mu, 1.0, r_max) * (1 + 1e-12)


# ----------------------------------------------------------- theoretical bounds


def test_bspline_bound_value():
    assert theoretical_bound("bspline", 2, 2.0) == pytest.approx(8 / 243, rel=1e-15)


def test_sinh_bound_value():
    expected = (24 * 2 ** 1.5 + 3) * math.exp(-4 * math.pi / math.sqrt(2))
    assert theoretical_bound("sinh", 2, 2.0) == pytest.approx(expected, rel=1e-14)


def test_mcosh_bound_value():
    with mp.workdps(30):
        expected = float(mp.mpf(21) / 4 / (mp.besseli(0, 8 * mp.pi / mp.sqrt(2)) + mp.mpf(1) / 2))
    assert theoretical_bound("mcosh", 4, 2.0) == pytest.approx(expected, rel=1e-12)
    assert mcosh_bound_minus_variant(4, 2.0) > theoretical_bound("mcosh", 4, 2.0)


def test_bessel_bound_value():
    expected = (50 * 27 + 7) * math.exp(-6 * math.pi * math.sqrt(1 / 3))
    assert theoretical_bound("bessel", 3, 1.5) == pytest.approx(expected, rel=1e-14)


def test_algebraic_bound_value():
    m, s = 3, 1.5
    with mp.workdps(30):
        j = mp.besselj(3 * m, mp.pi * m / s)
        expected = float(
            3 * mp.sqrt(s) / (mp.sqrt(mp.pi * m) * j)
            * (1 + (2 * s - 1) / ((6 * m - 1) * s)) * (2 * s - 1) ** (-3 * m - mp.mpf(1) / 2)
        )
    assert theoretical_bound("algebraic", m, s) == pytest.approx(expected, rel=1e-12)


def test_mbspline_bound_value():
    b, s = 2.5, 1.5
    assert theoretical_bound("mbspline", 3, s, b=b) == pytest.approx(
        4 * b / (2 * b - 1) * (2 * s * b - 1) ** (-2 * b), rel=1e-15
    )


def test_kaiser_bessel_reference():
    assert kaiser_bessel_reference(4, 2.0) == pytest.approx(
        32 * math.exp(-8 * math.pi * math.sqrt(0.5)), rel=1e-14
    )


@pytest.mark.parametrize(
    "kind, m, sigma",
    [("bessel", 3, 2.5), ("sinh", 3, 1.2), ("mcosh", 2, 2.01), ("triangular", 2, 2.0),
     ("bspline", 1, 2.0), ("algebraic", 3, 1.0), ("bspline", 2, 1.0)],
)
def test_theoretical_bound_rejects(kind, m, sigma):
    with pytest.raises(ValueError):
        theoretical_bound(kind, m, sigma)


@pytest.mark.parametrize("kind, base", [("exp", "sinh"), ("cosh", "sinh"),
                                        ("mexp", "mcosh"), ("msinh", "mcosh")])
def test_proxy_bounds(kind, base):
    assert bound_is_proxy(kind) and not bound_is_proxy(base)
    assert theoretical_bound(kind, 4, 1.5) == theoretical_bound(base, 4, 1.5)


# ------------------------------------------------------------- decay profiles


@pytest.mark.parametrize("kind", ["algebraic", "bessel", "mcosh"])
@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("sigma", [1.25, 1.5, 2.0])
def test_profile_bound_within_theorem(kind, m, sigma):
    # the stated bounds are simplifications of the profile bound
    w = make_window(kind, m, sigma, 1024)
    g = general_bound_from_profile(proof_profile(kind, m, sigma),
                                   float(w.unscaled_ft(m / (2 * sigma))), m, sigma)
    assert 0 < g <= theoretical_bound(kind, m, sigma) * (1 + 1e-3)


def test_mcosh_profile_matches_hand_expression():
    m, s = 3, 1.5
    beta = 2 * math.pi * m * (1 - 1 / (2 * s))
    ch = math.cosh(beta) - 1
    c1 = 3 * math.pi / (2 * ch)
    c2 = 3 * math.pi * m ** 2 / (2 * ch) * (1 - 1 / (2 * s)) ** 2
    prof = proof_profile("mcosh", m, s)
    assert (prof.c1, prof.c2, prof.mu) == pytest.approx((c1, c2, 2.0), rel=1e-14)
    ft = 1.0e-3
    expected = (2 * c1 + 2 * c2 / m ** 2 / (1 - 1 / (2 * s))) / ft
    assert general_bound_from_profile(prof, ft, m, s) == pytest.approx(expected, rel=1e-14)


def test_profile_bound_limit_without_tail():
    vals = [general_bound_from_profile(DecayProfile(0.3, c2, 2.5), 0.7, 3, 1.5)
            for c2 in (1e-3, 1e-9, 1e-15)]
    assert vals[-1] == pytest.approx(2 * 0.3 / 0.7, rel=1e-12)
    assert vals[0] > vals[1] > vals[2]


def test_bessel_profile_bound_exceeds_measured():
    w = make_window("bessel", 3, 1.5, 1024)
    g = general_bound_from_profile(proof_profile("bessel", 3, 1.5),
                                   float(w.unscaled_ft(1.0)), 3, 1.5)
    assert error_constant_aliasing(w).value <= g


@pytest.mark.parametrize("c1, c2, mu", [(0, 1, 2), (1, 0, 2), (1, 1, 1), (-1, 1, 3)])
def test_decay_profile_invariants(c1, c2, mu):
    with pytest.raises(ValueError):
        DecayProfile(c1, c2, mu)


def test_profile_bound_rejects_nonpositive_transform():
    with pytest.raises(ValueError):
        general_bound_from_profile(DecayProfile(1, 1, 2), 0.0, 2, 2.0)


# ------------------------------------------------------------ error constants


def test_aliasing_sinh_example():
    res = error_constant_aliasing(make_window("sinh", 5, 2.0, 1024))
    assert res.lower <= res.value
    assert res.lower <= 3.0197e-08 * 1.05 and res.value >= 3.0197e-08 * 0.95


def test_aliasing_bspline_example():
    res = error_constant_aliasing(make_window("bspline", 3, 1.25, 1024))
    assert res.lower <= 8.8620e-02 * 1.05 and res.value >= 8.8620e-02 * 0.95
    assert res.certified and res.tail_bound >= 0


def mp_bspline_constant(m, sigma, N, R):
    """``max_n sum_{r != 0} phi_hat(n + r N1) / phi_hat(n)`` summed directly.

    Every term is nonnegative, so the sup over the torus sits at ``t = 0``.
    """
    N1 = int(sigma * N)
    best = mp.mpf(0)
    with mp.workdps(30):
        ft = lambda v: mp.sinc(mp.pi * mp.mpf(v) / N1) ** (2 * m)
        for n in range(N // 2 + 1):
            s = mp.fsum(ft(n + r * N1) for r in range(-R, R + 1) if r)
            best = max(best, s / ft(n))
    return float(best)


def test_periodization_matches_brute_force_bspline():
    oracle = mp_bspline_constant(2, 2.0, 16, 10 ** 4)
    w = make_window("bspline", 2, 2.0, 16)
    per = error_constant_periodization(w)
    ali = error_constant_aliasing(w)
    assert per.value == pytest.approx(oracle, rel=1e-9)
    assert ali.lower <= oracle * (1 + 1e-12) <= ali.value * (1 + 1e-12)


def test_mcosh_methods_agree_small_case():
    w = make_window("mcosh", 2, 1.5, 64)
    per = error_constant_periodization(w).value
    ali = error_constant_aliasing(w)
    assert abs(ali.value - per) <= 1e-3 * per


@pytest.mark.parametrize("kind", list(Kind))
def test_smallest_N(kind):
    # N = 2 needs 2m < sigma N, so sigma = 3 with m = 2
    w = make_window(kind, 2, 3.0, 2)
    per = error_constant_periodization(w)
    assert math.isfinite(per.value) and per.value > 0


def test_periodization_n0_finite():
    res = error_constant_periodization(make_window("bspline", 2, 2.0, 2 * 8), grid=None)
    assert 0 <= res.lower <= res.value < math.inf


def test_periodization_rejects_coarse_grid():
    w = make_window("bspline", 2, 2.0, 16)
    with pytest.raises(ValueError):
        error_constant_periodization(w, grid=8 * 32)


@pytest.mark.parametrize("method", [error_constant_aliasing, error_constant_periodization])
def test_nonpositive_coefficient_is_an_error(method):
    with pytest.raises(NonpositiveCoefficient):
        method(make_window("triangular", 4, 2.0, 64))


@pytest.mark.parametrize("kind", ANALYTIC_KINDS)
@pytest.mark.parametrize("m, sigma", [(2, 2.0), (3, 1.5)])
def test_sup_envelope(kind, m, sigma):
    w = make_window(kind, m, sigma, 64)
    try:
        # the envelope is checked against whatever R the result reports
        res = error_constant_aliasing(w, rmax_cap=4096)
    except NonpositiveCoefficient:
        pytest.skip("transform vanishes inside the band")
    L = w.grid_length
    r = np.arange(-res.r_max, res.r_max + 1)
    r = r[r != 0]
    n = np.arange(0, w.params.N // 2 + 1)
    a = w.fourier_transform(n[:, None] + r[None, :] * L) / w.fourier_transform(n)[:, None]
    assert res.lower >= np.max(np.abs(a.sum(axis=1))) * (1 - 1e-12)
    assert res.value <= np.max(np.abs(a).sum(axis=1)) + res.tail_bound + 1e-15


@pytest.mark.parametrize("kind", ["algebraic", "bessel", "mcosh"])
@pytest.mark.parametrize("m, sigma, N", [(2, 2.0, 64), (4, 1.25, 256), (6, 1.5, 1024)])
def test_band_minimum_at_edge(kind, m, sigma, N):
    w = make_window(kind, m, sigma, N)
    n = np.arange(-N // 2, N // 2)
    assert n[np.argmin(w.fourier_transform(n))] == -N // 2


@pytest.mark.parametrize("kind", ANALYTIC_KINDS)
@pytest.mark.parametrize("m, sigma", [(2, 2.0), (4, 1.5), (3, 1.25)])
def test_uniform_in_N(kind, m, sigma):
    vals = []
    for N in (16, 64, 256, 1024):
        try:
            w = make_window(kind, m, sigma, N)
        except ValueError:
            continue
        try:
            vals.append(error_constant_periodization(w).value)
        except NonpositiveCoefficient:
            pytest.skip("transform vanishes inside the band")
    vals = np.array(vals)
    assert vals.max() - vals.min() <= 0.1 * vals.max()
    # approaches the supremum from below, up to rounding of the sup search
    assert np.all(np.diff(vals) >= -1e-6 * vals.max())


# --------------------------------------------------------------- verification


@pytest.mark.parametrize(
    "kind, m, sigma, measured",
    [("sinh", 4, 2.0, 1.8467e-06), ("mcosh", 6, 1.25, 1.2548e-06), ("bspline", 2, 1.25, 2.1004e-01)],
)
def test_verify_bound_examples(kind, m, sigma, measured):
    rep = verify_bound(kind, m, sigma, 1024)
    assert rep.ok and not rep.proxy
    assert rep.measured == pytest.approx(measured, rel=0.05)
    if kind == "bspline":
        assert rep.bound == pytest.approx(8 / 3 * 1.5 ** -4, rel=1e-14)


def test_verify_bound_flags_proxy():
    assert verify_bound("exp", 3, 1.5, 64).proxy


def test_verify_bound_rejects_unknown_method():
    with pytest.raises(ValueError):
        verify_bound("sinh", 3, 1.5, 64, method="simpson")


# ----------------------------------------------------------- aliasing identity


@pytest.mark.parametrize("kind", ANALYTIC_KINDS)
def test_rectangular_rule_equals_alias_series(kind, rng):
    # (1/L) sum_l e^{-2 pi i n l / L} phi~(x + l/L) = sum_r phi_hat(n + r L) e^{2 pi i (n + r L) x}
    w = make_window(kind, 3, 2.0, 64)
    L = w.grid_length
    R = 4000
    r = np.arange(-R, R + 1)
    model_tail = _tail_estimate(w, R)
    for _ in range(10):
        n = int(rng.integers(-32, 32))
        x = float(rng.uniform(-0.5, 0.5))
        ell = np.arange(L)
        lhs = np.sum(np.exp(-2j * np.pi * n * ell / L) * w.periodization_eval(x + ell / L)) / L
        rhs = np.sum(w.fourier_transform(n + r * L) * np.exp(2j * np.pi * (n + r * L) * x))
        assert abs(lhs - rhs) <= model_tail + 1e-12


def _tail_estimate(w, R):
    from compact_nfft.analysis import decay_model, tail_bound as tb

    model = decay_model(w)
    a, L = w.support, w.grid_length
    return model.k0 * a ** (1 - model.mu) * L ** -model.mu * tb(0.5, model.mu, 1.0, R)


def test_bessel_spherical_consistency():
    # guards the closed form used by the Bessel window transform
    assert float(specfun.bessel_i(2, 3.0)) == pytest.approx(float(mp.besseli(2, 3)), rel=1e-14)
