"""Rate functionals for the two-user symmetric Gaussian interference channel.

Everything here is a pure function of the channel ``(a, P)`` in standard form
and the private-power fractions ``(lambda1, lambda2)``.  Rates are in bits per
channel use.  The split arguments broadcast like numpy arrays, which lets the
grid oracles evaluate millions of splits in one call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

__all__ = [
    "ChannelParams",
    "PowerSplit",
    "CommonRateBounds",
    "RateResult",
    "gamma",
    "hk_sum_rate",
    "hk_terms",
    "common_bounds",
    "psi",
    "omega",
    "phi",
]

_LN2 = math.log(2.0)
CLAMP_EPS = 1e-12

SCHEMES = ("Sym", "Asym", "Orth", "ETW", "RS", "TS", "Sason", "BruteForce")


@dataclass(frozen=True)
class ChannelParams:
    """Standard-form channel: interference coefficient ``a`` and SNR ``p`` (linear)."""

    a: float
    p: float

    def __post_init__(self):
        a, p = float(self.a), float(self.p)
        if not math.isfinite(a) or not 0.0 < a < 1.0:
            raise ValueError(
                f"interference coefficient a={self.a!r} outside (0, 1); "
                "strong interference (a >= 1) is excluded"
            )
        if not math.isfinite(p) or p <= 0.0:
            raise ValueError(f"power p={self.p!r} must be positive and finite")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)

    @property
    def inr(self) -> float:
        return self.a * self.p


@dataclass(frozen=True)
class PowerSplit:
    """Private-power fractions of user 1 and user 2."""

    lambda1: float
    lambda2: float

    def __post_init__(self):
        for name in ("lambda1", "lambda2"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v < -CLAMP_EPS or v > 1.0 + CLAMP_EPS:
                raise ValueError(f"{name}={v!r} outside [0, 1]")
            object.__setattr__(self, name, _clamp(v))

    def swapped(self) -> "PowerSplit":
        return PowerSplit(self.lambda2, self.lambda1)


@dataclass(frozen=True)
class CommonRateBounds:
    """Sum-rate limits on the two common messages.

    ``bound_own`` decodes each user's own common message, ``bound_cross`` the
    other user's, ``bound_joint`` is the joint-decoding constraint.
    """

    bound_own: float
    bound_cross: float
    bound_joint: float


@dataclass
class RateResult:
    rate: float
    scheme: str
    split: PowerSplit | None = None
    extras: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise ValueError(f"unknown scheme tag {self.scheme!r}")
        if self.rate < 0:
            raise ValueError(f"negative rate {self.rate!r}")


def _clamp(x):
    """Snap fractions within CLAMP_EPS of 0 or 1 onto the boundary."""
    if np.ndim(x) == 0:
        x = float(x)
        if x < CLAMP_EPS:
            return 0.0
        if x > 1.0 - CLAMP_EPS:
            return 1.0
        return x
    x = np.asarray(x, dtype=float)
    return np.where(x < CLAMP_EPS, 0.0, np.where(x > 1.0 - CLAMP_EPS, 1.0, x))


def _g(x):
    # unchecked log2(1 + x) for internal use
    return np.log1p(x) / _LN2


def gamma(x):
    """Gaussian capacity ``log2(1 + x)``, computed via log1p.

    Raises ValueError for negative or non-finite input.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0):
        raise ValueError(f"gamma requires finite x >= 0, got {x!r}")
    out = np.log1p(arr) / _LN2
    return float(out) if out.ndim == 0 else out


def _split_args(split, lambda2=None):
    if lambda2 is not None:
        return _clamp(split), _clamp(lambda2)
    if isinstance(split, PowerSplit):
        return split.lambda1, split.lambda2
    l1, l2 = split
    return _clamp(l1), _clamp(l2)


def hk_terms(a, p1, p2, l1, l2):
    """Return ``(private, own, cross, joint)`` for array-valued splits.

    ``p1``/``p2`` are the per-user transmit powers (equal outside time
    sharing).  No validation; callers pass values already in range.
    """
    u1 = l1 * p1
    u2 = l2 * p2
    w1 = (1.0 - l1) * p1
    w2 = (1.0 - l2) * p2
    d1 = 1.0 + u1 + a * u2
    d2 = 1.0 + u2 + a * u1
    private = _g(u1 / (1.0 + a * u2)) + _g(u2 / (1.0 + a * u1))
    own = _g(w1 / d1) + _g(w2 / d2)
    cross = _g(a * w2 / d1) + _g(a * w1 / d2)
    joint = 0.5 * _g((w1 + a * w2) / d1) + 0.5 * _g((w2 + a * w1) / d2)
    return private, own, cross, joint


def _hk(a, p, l1, l2):
    private, _, cross, joint = hk_terms(a, p, p, l1, l2)
    return private + np.minimum(cross, joint)


def hk_sum_rate(ch: ChannelParams, split, lambda2=None):
    """HK sum rate for fixed power splits, no time sharing.

    ``split`` is a PowerSplit, a ``(lambda1, lambda2)`` pair, or ``lambda1``
    with ``lambda2`` given separately.  Array inputs broadcast.
    """
    l1, l2 = _split_args(split, lambda2)
    out = _hk(ch.a, ch.p, l1, l2)
    return float(out) if np.ndim(out) == 0 else out


def common_bounds(ch: ChannelParams, split) -> CommonRateBounds:
    l1, l2 = _split_args(split)
    _, own, cross, joint = hk_terms(ch.a, ch.p, ch.p, float(l1), float(l2))
    return CommonRateBounds(float(own), float(cross), float(joint))


def psi(ch: ChannelParams, lam):
    """Symmetric-split pair ``(psi1, psi2)`` with ``lambda1 = lambda2 = lam``.

    ``min(psi1, psi2)`` is the HK sum rate at the symmetric split.
    """
    a, p = ch.a, ch.p
    lam = _clamp(lam)
    lb = 1.0 - lam
    den = 1.0 + a * lam * p
    psi1 = 2.0 * _g((lam * p + a * lb * p) / den)
    psi2 = _g(lam * p / den) + _g((p + a * lb * p) / den)
    return psi1, psi2


def omega(ch: ChannelParams, lam):
    """Asymmetric pair ``(omega1, omega2)``: user 1 common-only, user 2 keeps ``lam`` private."""
    a, p = ch.a, ch.p
    lam = _clamp(lam)
    lb = 1.0 - lam
    base = _g(lam * p)
    omega1 = base + _g(a * p / (1.0 + lam * p)) + _g(a * lb * p / (1.0 + a * lam * p))
    omega2 = (
        base
        + 0.5 * _g((lb * p + a * p) / (1.0 + lam * p))
        + 0.5 * _g((p + a * lb * p) / (1.0 + a * lam * p))
    )
    return omega1, omega2


def phi(ch: ChannelParams, split, lambda2=None):
    """``(phi1, phi2)``: private sum plus the cross bound, and plus the joint bound."""
    l1, l2 = _split_args(split, lambda2)
    private, _, cross, joint = hk_terms(ch.a, ch.p, ch.p, l1, l2)
    return private + cross, private + joint
