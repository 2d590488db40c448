import math

import numpy as np
import pytest

from hkrates.optimizers import (
    InfeasibleRootError,
    Oracle2DSpec,
    Regime,
    TimeShareConfig,
    _sym_branch,
    asym_residual,
    asym_threshold,
    brute_force_rs,
    r_asym,
    r_etw,
    r_orth,
    r_rs,
    r_sason,
    r_sym,
    r_ts,
    sason_objective,
    sym_regime,
    ts_rate,
)
from hkrates.rates import ChannelParams, hk_sum_rate, omega, psi
from hkrates.search import BracketError, bisect
from hkrates.verify import grid_max_1d, sample_channels

# mpmath, 40 digits
R_SYM_01_50 = 6.444784842672896  # 2*log2(1 + 50/6)
R_SYM_05_100 = 7.408329740767391  # log2(1.5) + log2(113.25)
R_ASYM_03_5 = 2.906890595608519  # log2(7.5)
R_ORTH_100 = 7.651051691178929  # log2(201)
R_ETW_05_100 = 7.238404739325079  # 1 + log2(75.5)


def test_sym_regime_thresholds():
    reg = sym_regime(ChannelParams(0.5, 1.0))
    assert reg.t1 == pytest.approx(2.0)
    assert reg.t2 == pytest.approx(0.875 / (0.125 * 1.5))
    for a in np.linspace(0.01, 0.99, 50):
        reg = sym_regime(ChannelParams(float(a), 1.0))
        assert reg.t1 < reg.t2


def test_r_sym_private_only_case():
    res = r_sym(ChannelParams(0.1, 50))
    assert res.extras["regime"] == Regime.PRIVATE_ONLY.value
    assert res.split.lambda1 == res.split.lambda2 == 1.0
    assert res.rate == pytest.approx(R_SYM_01_50, abs=1e-12)


def test_r_sym_interior_case():
    res = r_sym(ChannelParams(0.5, 100))
    assert res.extras["regime"] == Regime.INTERIOR.value
    assert res.split.lambda1 == pytest.approx(1 / 150, abs=1e-15)
    assert res.rate == pytest.approx(R_SYM_05_100, abs=1e-12)


def test_r_sym_intersection_case_lambda_formula():
    a, p = 0.5, 3.0
    res = r_sym(ChannelParams(a, p))
    assert res.extras["regime"] == Regime.INTERSECTION.value
    assert res.split.lambda1 == pytest.approx((a * a * p + a - 1) / p, abs=1e-15)


@pytest.mark.parametrize("a", [0.05, 0.2, 0.5, 0.8, 0.97])
def test_r_sym_branches_meet_at_thresholds(a):
    reg = sym_regime(ChannelParams(a, 1.0))
    r_left, _ = _sym_branch(a, reg.t1, Regime.PRIVATE_ONLY)
    r_right, l_right = _sym_branch(a, reg.t1, Regime.INTERSECTION)
    assert r_left == pytest.approx(r_right, abs=1e-9)
    # the optimal split jumps from 1 to 0 at t1; both attain the same rate there
    ch = ChannelParams(a, reg.t1)
    assert l_right == pytest.approx(0.0, abs=1e-9)
    assert hk_sum_rate(ch, (0.0, 0.0)) == pytest.approx(hk_sum_rate(ch, (1.0, 1.0)), abs=1e-9)
    r2l, l2l = _sym_branch(a, reg.t2, Regime.INTERSECTION)
    r2r, l2r = _sym_branch(a, reg.t2, Regime.INTERIOR)
    assert r2l == pytest.approx(r2r, abs=1e-9)
    assert l2l == pytest.approx(l2r, abs=1e-9)


def test_r_sym_equals_min_psi_at_optimum():
    rng = np.random.default_rng(7)
    for ch in sample_channels(rng, 50):
        res = r_sym(ch)
        assert res.rate == pytest.approx(min(psi(ch, res.split.lambda1)), abs=1e-12)


def test_r_sym_against_grid_oracle():
    rng = np.random.default_rng(11)
    for ch in sample_channels(rng, 25):
        best, _ = grid_max_1d(lambda x: np.minimum(*psi(ch, x)))
        assert abs(r_sym(ch).rate - best) < 1e-6, (ch, best)


def test_r_asym_below_threshold():
    res = r_asym(ChannelParams(0.3, 5))
    assert res.split.lambda1 == 0.0 and res.split.lambda2 == 1.0
    assert res.rate == pytest.approx(R_ASYM_03_5, abs=1e-12)


def test_r_asym_root_residuals():
    ch = ChannelParams(0.5, 100)
    res = r_asym(ch)
    lam = res.split.lambda2
    o1, o2 = omega(ch, lam)
    assert abs(o1 - o2) < 1e-9
    # residual of the closed-form balance equation, relative to its scale
    assert abs(asym_residual(ch, lam)) / (1 + ch.p + ch.a * ch.p) < 1e-9
    expected = math.log2((1 + lam * ch.p + ch.a * ch.p) * (1 + ch.a * ch.p) / (1 + ch.a * lam * ch.p))
    assert res.rate == pytest.approx(expected, abs=1e-12)
    assert res.rate == pytest.approx(min(o1, o2), abs=1e-9)


def test_r_asym_against_grid_oracle():
    ch = ChannelParams(0.5, 100)
    best, _ = grid_max_1d(lambda x: np.minimum(*omega(ch, x)), step=1e-5)
    assert abs(r_asym(ch).rate - best) < 1e-6


def test_r_asym_below_threshold_against_grid_oracle():
    rng = np.random.default_rng(5)
    for a in rng.uniform(0.05, 0.95, 20):
        p = asym_threshold(a) * rng.uniform(0.01, 0.99)
        ch = ChannelParams(float(a), float(p))
        best, _ = grid_max_1d(lambda x: np.minimum(*omega(ch, x)))
        assert abs(r_asym(ch).rate - best) < 1e-6


def test_r_asym_at_threshold():
    a = 0.4
    ch = ChannelParams(a, asym_threshold(a))
    res = r_asym(ch)
    assert res.split.lambda2 == pytest.approx(0.0, abs=1e-6)
    assert res.rate == pytest.approx(min(omega(ch, res.split.lambda2)), abs=1e-9)


def test_bisect_reports_missing_bracket():
    with pytest.raises(BracketError) as info:
        bisect(lambda x: x + 1.0, 0.0, 1.0)
    assert info.value.f_lo == 1.0 and info.value.f_hi == 2.0
    assert issubclass(InfeasibleRootError, BracketError)


def test_bisect_finds_root():
    assert bisect(lambda x: x * x - 2.0, 0.0, 2.0, ftol=1e-15) == pytest.approx(math.sqrt(2), abs=1e-13)


def test_r_orth():
    assert r_orth(ChannelParams(0.5, 100)).rate == pytest.approx(R_ORTH_100, abs=1e-12)
    assert r_orth(ChannelParams(0.5, 0.5)).rate == pytest.approx(1.0, abs=1e-15)
    assert r_orth(ChannelParams(0.1, 7.0)).rate == r_orth(ChannelParams(0.9, 7.0)).rate


def test_r_etw():
    res = r_etw(ChannelParams(0.5, 100))
    assert res.rate == pytest.approx(R_ETW_05_100, abs=1e-12)
    assert res.extras["infeasible"] is False
    ch = ChannelParams(0.25, 4.0)  # aP = 1
    assert r_etw(ch).rate == pytest.approx(hk_sum_rate(ch, (1, 1)), abs=1e-12)


def test_r_etw_flags_infeasible_split():
    ch = ChannelParams(0.1, 5.0)
    res = r_etw(ch)
    assert res.extras["infeasible"] is True
    assert res.rate == pytest.approx(2 * math.log2(1 + 5.0 / 1.5), abs=1e-12)


def test_r_etw_never_beats_r_sym():
    rng = np.random.default_rng(3)
    for ch in sample_channels(rng, 200):
        if ch.a * ch.p >= 1:
            assert r_etw(ch).rate <= r_sym(ch).rate + 1e-9


def test_r_rs_picks_winner():
    assert r_rs(ChannelParams(0.05, 100)).extras["via"] == "Sym"
    res = r_rs(ChannelParams(0.5, 100))
    assert res.extras["via"] == "Asym"
    assert res.rate == r_asym(ChannelParams(0.5, 100)).rate
    assert res.scheme == "RS"


def test_r_rs_dominates_random_splits():
    rng = np.random.default_rng(9)
    for ch in sample_channels(rng, 40):
        best = r_rs(ch).rate
        l1, l2 = rng.uniform(0, 1, (2, 500))
        assert np.all(hk_sum_rate(ch, l1, l2) <= best + 1e-9)


def test_brute_force_corners():
    ch = ChannelParams(0.5, 100)
    res = brute_force_rs(ch, Oracle2DSpec(steps=2, refine=0))
    corners = [hk_sum_rate(ch, c) for c in [(0, 0), (0, 1), (1, 0), (1, 1)]]
    assert res.rate == pytest.approx(max(corners), abs=1e-15)


def test_brute_force_matches_r_rs():
    ch = ChannelParams(0.5, 100)
    res = brute_force_rs(ch, Oracle2DSpec(steps=1001))
    assert abs(res.rate - r_rs(ch).rate) < 1e-3
    assert res.rate <= r_rs(ch).rate + 1e-3


@pytest.mark.parametrize("a,p", [(0.05, 100), (0.5, 100), (0.3, 1e4), (0.02, 1e4), (0.15, 300)])
def test_brute_force_optimum_structure(a, p):
    res = brute_force_rs(ChannelParams(a, p), Oracle2DSpec(steps=501))
    l1, l2 = res.split.lambda1, res.split.lambda2
    assert abs(l1 - l2) < 5e-3 or l1 < 5e-3


def test_brute_force_is_deterministic():
    ch = ChannelParams(0.37, 250.0)
    spec = Oracle2DSpec(steps=301)
    a, b = brute_force_rs(ch, spec), brute_force_rs(ch, spec)
    assert a.rate == b.rate and a.split == b.split


def test_oracle_spec_validation():
    with pytest.raises(ValueError):
        Oracle2DSpec(steps=1)
    with pytest.raises(ValueError):
        Oracle2DSpec(refine=-1)


def test_time_share_config_validation():
    cfg = TimeShareConfig(0.5, None)
    assert cfg.alpha2 == 1.5
    with pytest.raises(ValueError):
        TimeShareConfig(2.5, None)
    with pytest.raises(ValueError):
        TimeShareConfig(1.0, None, beta=0.6)


def test_ts_rate_special_cases():
    a, p = 0.5, 100.0
    ch = ChannelParams(a, p)
    lam = r_sym(ch).split.lambda1
    assert ts_rate(a, p, 1.0, lam, lam) == pytest.approx(r_sym(ch).rate, abs=1e-12)
    assert ts_rate(a, p, 0.0, 1.0, 1.0) == pytest.approx(r_orth(ch).rate, abs=1e-12)
    lam = r_asym(ch).split.lambda2
    assert ts_rate(a, p, 1.0, 0.0, lam) == pytest.approx(r_asym(ch).rate, abs=1e-12)


def test_r_ts_contains_no_ts_schemes():
    ch = ChannelParams(0.5, 100)
    res = r_ts(ch)
    assert res.rate >= r_rs(ch).rate - 1e-9
    assert res.rate >= r_orth(ch).rate - 1e-9
    cfg = res.extras["config"]
    assert cfg.alpha1 + cfg.alpha2 == pytest.approx(2.0)
    assert ts_rate(ch.a, ch.p, cfg.alpha1, cfg.split_slot.lambda1, cfg.split_slot.lambda2) == pytest.approx(res.rate)


def test_sason_endpoints():
    ch = ChannelParams(0.5, 100)
    assert sason_objective(ch, 0.5) == pytest.approx(r_rs(ch).rate, abs=1e-12)
    assert sason_objective(ch, 0.0) == pytest.approx(r_orth(ch).rate, abs=1e-12)
    with pytest.raises(ValueError):
        sason_objective(ch, 0.7)


@pytest.mark.parametrize("a,p", [(0.05, 100), (0.066, 100), (0.5, 100), (0.9, 10)])
def test_r_sason_dominates_endpoints(a, p):
    ch = ChannelParams(a, p)
    res = r_sason(ch)
    assert res.rate >= max(r_rs(ch).rate, r_orth(ch).rate) - 1e-9
    assert 0.0 <= res.extras["beta"] <= 0.5
    assert sason_objective(ch, res.extras["beta"]) == pytest.approx(res.rate, abs=1e-12)
