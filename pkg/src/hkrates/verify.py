"""Seeded invariant suites checking the optimizers against independent oracles.

Each suite returns a :class:`SuiteResult` with the number of checks, the
violations found and the worst residual seen.  Sampling is driven entirely by
``numpy.random.default_rng(seed)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import asymptotics
from .optimizers import (
    Oracle2DSpec,
    asym_threshold,
    brute_force_rs,
    r_asym,
    r_etw,
    r_rs,
    r_sym,
    sym_regime,
    _sym_branch,
    Regime,
)
from .rates import ChannelParams, common_bounds, hk_sum_rate, omega, psi
from .search import zoom_maximize

__all__ = [
    "SuiteResult",
    "SUITES",
    "sample_channels",
    "grid_max_1d",
    "run_suite",
]


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    worst: float = 0.0
    tolerance: float = 0.0
    failures: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, residual: float, point: tuple, tolerance: float | None = None):
        """Log one check; ``tolerance`` overrides the suite default for it."""
        tol = self.tolerance if tolerance is None else tolerance
        self.checks += 1
        if not residual <= self.worst:
            self.worst = residual
        if not residual <= tol:
            self.failures.append(point + (residual,))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.checks} checks, {len(self.failures)} violations, "
            f"worst residual {self.worst:.3e} (tol {self.tolerance:.1e})"
        )


def sample_channels(rng, n, a_range=(0.01, 0.99), p_range=(0.1, 1e4)):
    """``n`` channels with ``a`` uniform and ``P`` log-uniform."""
    a = rng.uniform(*a_range, size=n)
    p = np.exp(rng.uniform(math.log(p_range[0]), math.log(p_range[1]), size=n))
    return [ChannelParams(float(x), float(y)) for x, y in zip(a, p)]


def grid_max_1d(f, step=1e-5, refine=True):
    """Maximum of a scalar-array function on ``[0, 1]`` by grid plus zoom.

    Used as the oracle for the one-dimensional optimizers.
    """
    x = np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)
    v = f(x)
    k = int(np.argmax(v))
    best, arg = float(v[k]), float(x[k])
    if refine:
        val, c = zoom_maximize(f, (arg,), step, (0.0,), (1.0,), points=41, xtol=1e-13)
        if val > best:
            best, arg = val, float(c[0])
    return best, arg


def dominance(rng, samples=10_000):
    res = SuiteResult("dominance", tolerance=0.0)
    a = rng.uniform(1e-6, 1 - 1e-6, samples)
    p = np.exp(rng.uniform(math.log(1e-3), math.log(1e6), samples))
    l1 = rng.uniform(0, 1, samples)
    l2 = rng.uniform(0, 1, samples)
    for args in zip(a, p, l1, l2):
        b = common_bounds(ChannelParams(args[0], args[1]), (args[2], args[3]))
        res.record(b.bound_cross - b.bound_own, tuple(float(t) for t in args))
    return res


def monotonicity(rng, samples=200, n_lambda=50, h=1e-6):
    """Above the asymmetric threshold, omega1 falls and omega2 rises in lambda."""
    res = SuiteResult("monotonicity", tolerance=0.0)
    a = rng.uniform(0.01, 0.99, samples)
    for ai in a:
        t = asym_threshold(ai)
        p = t * math.exp(rng.uniform(0.0, math.log(1e4)))
        ch = ChannelParams(float(ai), p)
        lam = rng.uniform(h, 1 - h, n_lambda)
        o1p, o2p = omega(ch, lam + h)
        o1m, o2m = omega(ch, lam - h)
        s1 = float(np.max(o1p - o1m))
        s2 = float(np.max(o2m - o2p))
        res.record(max(s1, s2), (ch.a, ch.p))
    return res


def sym_oracle(rng, samples=200, step=1e-5):
    """Closed-form symmetric optimum against a dense 1-D grid of min(psi1, psi2)."""
    res = SuiteResult("sym-oracle", tolerance=1e-6)
    for ch in sample_channels(rng, samples):
        sym = r_sym(ch)
        best, _ = grid_max_1d(lambda x: np.minimum(*psi(ch, x)), step)
        res.record(abs(sym.rate - best), (ch.a, ch.p))
    return res


def asym_root(rng, samples=200, step=1e-5):
    """Bisection root: balance residual and agreement with a 1-D grid of min(omega)."""
    res = SuiteResult("asym-root", tolerance=1e-6)
    a = rng.uniform(0.01, 0.99, samples)
    for ai in a:
        p = asym_threshold(ai) * math.exp(rng.uniform(0.0, math.log(1e4)))
        ch = ChannelParams(float(ai), p)
        asym = r_asym(ch)
        lam = asym.split.lambda2
        o1, o2 = omega(ch, lam)
        best, _ = grid_max_1d(lambda x: np.minimum(*omega(ch, x)), step)
        res.record(abs(float(o1 - o2)), ("balance", ch.a, ch.p), tolerance=1e-9)
        res.record(abs(asym.rate - best), ("oracle", ch.a, ch.p))
    return res


def continuity(rng, samples=200):
    """Symmetric rate agrees across both power thresholds; the split also at the upper one."""
    res = SuiteResult("continuity", tolerance=1e-9)
    for ai in rng.uniform(0.01, 0.99, samples):
        ai = float(ai)
        reg = sym_regime(ChannelParams(ai, 1.0))
        r1a, _ = _sym_branch(ai, reg.t1, Regime.PRIVATE_ONLY)
        r1b, _ = _sym_branch(ai, reg.t1, Regime.INTERSECTION)
        r2a, l2a = _sym_branch(ai, reg.t2, Regime.INTERSECTION)
        r2b, l2b = _sym_branch(ai, reg.t2, Regime.INTERIOR)
        scale = max(1.0, abs(r1a), abs(r2a))
        resid = max(abs(r1a - r1b), abs(r2a - r2b), abs(l2a - l2b)) / scale
        res.record(resid, (ai,))
    return res


def etw(rng, samples=500):
    res = SuiteResult("etw", tolerance=1e-9)
    for ch in sample_channels(rng, samples):
        if ch.a * ch.p < 1.0:
            continue
        r = r_etw(ch).rate
        lam = 1.0 / (ch.a * ch.p)
        resid = max(abs(r - hk_sum_rate(ch, (lam, lam))), r - r_sym(ch).rate)
        res.record(resid, (ch.a, ch.p))
    return res


def conjecture(rng, samples=100, steps=1001):
    """Refined 2-D grid oracle never beats max(R_sym, R_asym) by more than 1e-3."""
    res = SuiteResult("conjecture", tolerance=1e-3)
    spec = Oracle2DSpec(steps=steps)
    for ch in sample_channels(rng, samples, a_range=(0.02, 0.98), p_range=(1.0, 1e4)):
        bf = brute_force_rs(ch, spec).rate
        res.record(abs(bf - r_rs(ch).rate), (ch.a, ch.p))
    return res


def asymptotes(rng=None, p=1e8, a_values=(0.1, 0.3, 0.5, 0.7, 0.9)):
    res = SuiteResult("asymptotes", tolerance=1e-2)
    for a in a_values:
        for scheme in asymptotics.OFFSET_SCHEMES:
            (_, off), = asymptotics.offset_convergence(scheme, a, [p])
            res.record(abs(off - asymptotics.delta_offset(scheme, a)), (scheme, a))
        lam = r_asym(ChannelParams(a, p)).split.lambda2
        res.record(abs(lam - asymptotics.asymptotic_lambda_asym(a)), ("lambda_asym", a), tolerance=1e-3)
    return res


SUITES = {
    "dominance": (dominance, 10_000),
    "monotonicity": (monotonicity, 200),
    "sym-oracle": (sym_oracle, 200),
    "asym-root": (asym_root, 200),
    "continuity": (continuity, 200),
    "etw": (etw, 500),
    "conjecture": (conjecture, 50),
    "asymptotes": (asymptotes, None),
}


def run_suite(name: str, seed: int = 0, samples: int | None = None) -> SuiteResult:
    fn, default = SUITES[name]
    rng = np.random.default_rng([seed, list(SUITES).index(name)])
    if default is None:
        return fn(rng)
    return fn(rng, samples if samples is not None else default)

