"""Optimized HK sum rates and the baselines they are compared against.

Closed forms are used where they exist (symmetric splits, orthogonal
signalling, the fixed ETW split); the asymmetric split is a bisection on a
monotone difference; the time-sharing rates and the 2-D oracle are
derivative-free grid searches with local refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.optimize import minimize_scalar

from .rates import (
    ChannelParams,
    PowerSplit,
    RateResult,
    _g,
    _hk,
    hk_terms,
    omega,
)
from .search import BracketError, bisect, top_candidates, zoom_maximize

__all__ = [
    "SymRegime",
    "Regime",
    "TimeShareConfig",
    "Oracle2DSpec",
    "InfeasibleRootError",
    "sym_regime",
    "asym_threshold",
    "r_sym",
    "r_asym",
    "asym_residual",
    "r_orth",
    "r_etw",
    "r_rs",
    "brute_force_rs",
    "ts_rate",
    "r_ts",
    "sason_objective",
    "r_sason",
]

TIE_TOL = 1e-12


class Regime(str, Enum):
    PRIVATE_ONLY = "PrivateOnly"
    INTERSECTION = "Intersection"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class SymRegime:
    tag: Regime
    t1: float
    t2: float


@dataclass(frozen=True)
class TimeShareConfig:
    """Equal-slot time sharing; slot 2 mirrors slot 1 with the users swapped."""

    alpha1: float
    split_slot: PowerSplit
    beta: float | None = None

    def __post_init__(self):
        if not 0.0 <= self.alpha1 <= 2.0:
            raise ValueError(f"alpha1={self.alpha1!r} outside [0, 2]")
        if self.beta is not None and not 0.0 <= self.beta <= 0.5:
            raise ValueError(f"beta={self.beta!r} outside [0, 1/2]")

    @property
    def alpha2(self) -> float:
        return 2.0 - self.alpha1


@dataclass(frozen=True)
class Oracle2DSpec:
    """Grid oracle settings: ``steps`` points per axis, ``refine`` zoom rounds (0 = off)."""

    steps: int = 1001
    refine: int = 400
    candidates: int = 8

    def __post_init__(self):
        if self.steps < 2:
            raise ValueError("steps must be >= 2")
        if self.refine < 0 or self.candidates < 1:
            raise ValueError("refine must be >= 0 and candidates >= 1")


class InfeasibleRootError(BracketError):
    pass


def sym_regime(ch: ChannelParams) -> SymRegime:
    a, p = ch.a, ch.p
    t1 = (1.0 - a) / a**2
    t2 = (1.0 - a**3) / (a**3 * (1.0 + a))
    if p <= t1:
        tag = Regime.PRIVATE_ONLY
    elif p <= t2:
        tag = Regime.INTERSECTION
    else:
        tag = Regime.INTERIOR
    return SymRegime(tag, t1, t2)


def asym_threshold(a: float) -> float:
    """Power above which the asymmetric split has an interior optimum."""
    return (1.0 - a) / a**2


def _sym_branch(a, p, regime):
    if regime is Regime.PRIVATE_ONLY:
        return 2.0 * _g(p / (1.0 + a * p)), 1.0
    if regime is Regime.INTERSECTION:
        u = a * a * p + a - 1.0
        rate = 2.0 * _g((u * (1.0 - a) + a * p) / (1.0 + a * u))
        return rate, u / p
    rate = _g((1.0 - a) / (2.0 * a)) + _g(((1.0 + a) ** 2 * p - (1.0 - a)) / 2.0)
    return rate, (1.0 - a) / ((1.0 + a) * a * p)


def r_sym(ch: ChannelParams) -> RateResult:
    """Best HK sum rate with a common split ``lambda1 = lambda2``, closed form."""
    reg = sym_regime(ch)
    rate, lam = _sym_branch(ch.a, ch.p, reg.tag)
    return RateResult(
        float(rate),
        "Sym",
        PowerSplit(lam, lam),
        {"regime": reg.tag.value, "t1": reg.t1, "t2": reg.t2},
    )


def _asym_gap(ch):
    def f(lam):
        o1, o2 = omega(ch, lam)
        return float(o1 - o2)

    return f


def r_asym(ch: ChannelParams) -> RateResult:
    """Best HK sum rate when user 1 sends only a common message.

    Above the threshold power the optimum is the crossing of the two
    asymmetric bounds (one falls, the other rises in ``lambda``); below it the
    optimum sits at ``lambda = 1``.
    """
    a, p = ch.a, ch.p
    if p < asym_threshold(a):
        lam = 1.0
        rate = math.log2(1.0 + p + a * p)
    else:
        f = _asym_gap(ch)
        try:
            lam = bisect(f, 0.0, 1.0, ftol=1e-12, xtol=1e-14)
        except BracketError as exc:
            raise InfeasibleRootError(exc.lo, exc.hi, exc.f_lo, exc.f_hi) from None
        rate = math.log2((1.0 + lam * p + a * p) * (1.0 + a * p) / (1.0 + a * lam * p))
    return RateResult(float(rate), "Asym", PowerSplit(0.0, lam), {"lambda_asym": lam})


def asym_residual(ch: ChannelParams, lam: float) -> float:
    """Residual of the closed-form balance equation defining ``lambda_asym``."""
    a, p = ch.a, ch.p
    lhs = math.sqrt((1.0 + lam * p) / (1.0 + a * lam * p)) * (1.0 + p + a * p)
    rhs = (1.0 + lam * p + a * p) * (1.0 + a * p) / (1.0 + a * lam * p)
    return lhs - rhs


def r_orth(ch: ChannelParams) -> RateResult:
    return RateResult(float(_g(2.0 * ch.p)), "Orth")


def r_etw(ch: ChannelParams) -> RateResult:
    """Sum rate of the fixed split ``lambda = 1/(aP)``.

    For ``aP < 1`` that split is infeasible; the result is computed at
    ``lambda = 1`` and flagged with ``extras["infeasible"] = True``.
    """
    a, p = ch.a, ch.p
    if a * p < 1.0:
        rate = 2.0 * _g(p / (1.0 + a * p))
        return RateResult(float(rate), "ETW", PowerSplit(1.0, 1.0), {"infeasible": True})
    lam = 1.0 / (a * p)
    rate = min(
        _g(1.0 / (2.0 * a)) + _g((p * (1.0 + a) - 1.0) / 2.0),
        2.0 * _g((1.0 - a + a * a * p) / (2.0 * a)),
    )
    return RateResult(float(rate), "ETW", PowerSplit(lam, lam), {"infeasible": False})


def r_rs(ch: ChannelParams) -> RateResult:
    """``max(r_sym, r_asym)``; near-ties (< 1e-12) go to the symmetric split."""
    sym, asym = r_sym(ch), r_asym(ch)
    best = asym if asym.rate > sym.rate + TIE_TOL else sym
    extras = dict(best.extras)
    extras.update(via=best.scheme, r_sym=sym.rate, r_asym=asym.rate)
    return RateResult(best.rate, "RS", best.split, extras)


@lru_cache(maxsize=4)
def _triangle(steps):
    x = np.linspace(0.0, 1.0, steps)
    l1, l2 = np.meshgrid(x, x, indexing="ij")
    keep = l1 <= l2
    return l1[keep], l2[keep]


def brute_force_rs(ch: ChannelParams, spec: Oracle2DSpec | None = None) -> RateResult:
    """Grid maximum of the HK sum rate over ``[0, 1]^2``.

    Only ``lambda1 <= lambda2`` is scanned since the rate is swap-symmetric.
    The best ``spec.candidates`` grid points are then refined locally.
    """
    spec = spec or Oracle2DSpec()
    a, p = ch.a, ch.p
    l1, l2 = _triangle(spec.steps)
    vals = _hk(a, p, l1, l2)
    idx = top_candidates(vals, (l1, l2), spec.candidates)
    best_val = float(vals[idx[0]])
    best = np.array([l1[idx[0]], l2[idx[0]]])
    if spec.refine:
        h = 1.0 / (spec.steps - 1)

        def f(x, y):
            return _hk(a, p, x, y)

        for i in idx:
            v, c = zoom_maximize(f, (l1[i], l2[i]), h, (0.0, 0.0), (1.0, 1.0), maxiter=spec.refine)
            if v > best_val:
                best_val, best = v, c
    lo, hi = sorted(float(t) for t in best)
    return RateResult(best_val, "BruteForce", PowerSplit(lo, hi), {"steps": spec.steps})


def ts_rate(a, p, alpha1, l1, l2):
    """Two-slot time-sharing sum rate, three-term common-message minimum.

    User 1 transmits at ``alpha1 * p`` and user 2 at ``(2 - alpha1) * p`` in
    the first slot; the mirrored slot gives the same sum, so this is also the
    time average.  Broadcasts over array arguments.
    """
    alpha2 = 2.0 - alpha1
    private, own, cross, joint = hk_terms(a, alpha1 * p, alpha2 * p, l1, l2)
    return private + np.minimum(np.minimum(cross, joint), own)


def _ts_seeds(ch):
    sym, asym = r_sym(ch), r_asym(ch)
    ls = sym.split.lambda1
    return [
        (1.0, ls, ls),
        (1.0, 0.0, asym.split.lambda2),
        (0.0, 1.0, 1.0),
    ]


def r_ts(ch: ChannelParams, coarse_alpha=0.01, coarse_lambda=0.01, candidates=4) -> RateResult:
    """Equal-slot two-slot time sharing, maximized by grid scan plus zoom.

    The scan is seeded with the no-time-sharing optima (equal powers with the
    symmetric or asymmetric split, and TDMA), so the result never falls below
    them.
    """
    a, p = ch.a, ch.p

    def f(al, x, y):
        return ts_rate(a, p, al, x, y)

    alphas = np.linspace(0.0, 2.0, int(round(2.0 / coarse_alpha)) + 1)
    lams = np.linspace(0.0, 1.0, int(round(1.0 / coarse_lambda)) + 1)
    A, X, Y = np.meshgrid(alphas, lams, lams, indexing="ij")
    vals = f(A, X, Y)
    flat = vals.ravel()
    coords = (A.ravel(), X.ravel(), Y.ravel())
    starts = [tuple(c[i] for c in coords) for i in top_candidates(flat, coords, candidates)]
    seeds = _ts_seeds(ch)

    best_val, best = -np.inf, None
    for s in seeds:
        v = float(f(*s))
        if v > best_val:
            best_val, best = v, np.array(s)
    width = (coarse_alpha, coarse_lambda, coarse_lambda)
    for s in starts + seeds:
        v, c = zoom_maximize(f, s, width, (0.0, 0.0, 0.0), (2.0, 1.0, 1.0), points=11)
        if v > best_val:
            best_val, best = v, c
    cfg = TimeShareConfig(float(best[0]), PowerSplit(float(best[1]), float(best[2])))
    return RateResult(best_val, "TS", cfg.split_slot, {"config": cfg, "alpha1": cfg.alpha1, "alpha2": cfg.alpha2})


def sason_objective(ch: ChannelParams, beta: float) -> float:
    """Four-slot rate at a given ``beta`` in ``[0, 1/2]``."""
    if not 0.0 <= beta <= 0.5:
        raise ValueError(f"beta={beta!r} outside [0, 1/2]")
    a, p = ch.a, ch.p
    tdma = (1.0 - 2.0 * beta) * _g(2.0 * (1.0 + 2.0 * beta) * p)
    if beta == 0.0:
        return float(tdma)
    return float(2.0 * beta * r_rs(ChannelParams(a, 2.0 * beta * p)).rate + tdma)


def r_sason(ch: ChannelParams, coarse_step=0.005) -> RateResult:
    """Maximize the four-slot scheme over ``beta``: coarse scan, then bounded Brent."""
    betas = np.linspace(0.0, 0.5, int(round(0.5 / coarse_step)) + 1)
    vals = np.array([sason_objective(ch, float(b)) for b in betas])
    k = int(np.argmax(vals))
    best_beta, best_val = float(betas[k]), float(vals[k])
    lo, hi = max(0.0, best_beta - coarse_step), min(0.5, best_beta + coarse_step)
    res = minimize_scalar(
        lambda b: -sason_objective(ch, float(b)),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-10},
    )
    if res.success and -res.fun > best_val:
        best_beta, best_val = float(res.x), float(-res.fun)
    inner = r_rs(ChannelParams(ch.a, 2.0 * best_beta * ch.p)) if best_beta > 0 else None
    cfg = TimeShareConfig(1.0, inner.split if inner else PowerSplit(1.0, 1.0), beta=best_beta)
    return RateResult(best_val, "Sason", cfg.split_slot, {"config": cfg, "beta": best_beta})
