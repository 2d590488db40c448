"""Best no-time-sharing strategy over the ``(a, P)`` plane.

Labels follow the numbering used for the strategy map: 1 symmetric split with
private messages only, 2 orthogonal signalling, 3 asymmetric split, 4 symmetric
split.  Label 0 marks grid points outside ``0 < a < 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import IntEnum

import numpy as np

from .optimizers import TIE_TOL, r_asym, r_etw, r_orth, r_rs, r_sason, r_sym, r_ts
from .rates import ChannelParams

__all__ = [
    "RegionLabel",
    "Boundary",
    "ScanRow",
    "GridScan",
    "classify",
    "classify_rates",
    "boundary_scan",
    "scan",
    "ts_advantage",
    "db_to_linear",
    "linear_to_db",
]


class RegionLabel(IntEnum):
    OUT_OF_DOMAIN = 0
    SYM_PRIVATE_ONLY = 1
    ORTHOGONAL = 2
    ASYM_SPLIT = 3
    SYM_SPLIT = 4


# tie precedence, highest first
_PRECEDENCE = (
    RegionLabel.SYM_PRIVATE_ONLY,
    RegionLabel.SYM_SPLIT,
    RegionLabel.ASYM_SPLIT,
    RegionLabel.ORTHOGONAL,
)


def db_to_linear(x_db):
    return 10.0 ** (np.asarray(x_db, dtype=float) / 10.0)


def linear_to_db(x):
    return 10.0 * np.log10(np.asarray(x, dtype=float))


def classify_rates(r_sym_rate, lambda_sym, r_asym_rate, r_orth_rate) -> RegionLabel:
    sym_label = RegionLabel.SYM_PRIVATE_ONLY if lambda_sym == 1.0 else RegionLabel.SYM_SPLIT
    rates = {
        sym_label: r_sym_rate,
        RegionLabel.ASYM_SPLIT: r_asym_rate,
        RegionLabel.ORTHOGONAL: r_orth_rate,
    }
    top = max(rates.values())
    for label in _PRECEDENCE:
        if label in rates and rates[label] >= top - TIE_TOL:
            return label
    raise AssertionError("unreachable")


def classify(ch: ChannelParams) -> RegionLabel:
    sym = r_sym(ch)
    return classify_rates(sym.rate, sym.split.lambda1, r_asym(ch).rate, r_orth(ch).rate)


@dataclass(frozen=True)
class Boundary:
    a: float
    left: RegionLabel
    right: RegionLabel


def boundary_scan(p: float, resolution: int = 2000, tol: float = 1e-6) -> list[Boundary]:
    """Locate every label change along ``a`` in ``(0, 1)`` at fixed power ``p``.

    Changes are bracketed on the grid ``k / resolution`` and then bisected to
    ``tol``.  Assumes at most one change per bracket.
    """
    if resolution < 100:
        raise ValueError("resolution must be >= 100")
    grid = np.arange(1, resolution) / resolution
    labels = [classify(ChannelParams(float(a), p)) for a in grid]
    out = []
    for k in range(len(grid) - 1):
        left, right = labels[k], labels[k + 1]
        if left == right:
            continue
        lo, hi = float(grid[k]), float(grid[k + 1])
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if classify(ChannelParams(mid, p)) == left:
                lo = mid
            else:
                hi = mid
        out.append(Boundary(0.5 * (lo + hi), left, right))
    return out


@dataclass
class ScanRow:
    x: float
    y: float
    a: float
    p: float
    label: RegionLabel
    r_sym: float = math.nan
    r_asym: float = math.nan
    r_orth: float = math.nan
    r_etw: float = math.nan
    r_ts: float | None = None
    r_sason: float | None = None

    @property
    def in_domain(self) -> bool:
        return self.label != RegionLabel.OUT_OF_DOMAIN

    @property
    def r_no_ts(self) -> float:
        return max(self.r_sym, self.r_asym, self.r_orth)


@dataclass
class GridScan:
    """Rectangular grid over ``(a, P_dB)`` or ``(SNR_dB, INR_dB)`` plus its rows.

    ``axes`` is ``"a-p"`` (x = a linear, y = P in dB) or ``"snr-inr"``
    (x = SNR in dB, y = INR in dB).  With ``steps == 1`` an axis holds only its
    minimum.
    """

    axes: str = "a-p"
    x_min: float = 0.01
    x_max: float = 0.99
    x_steps: int = 50
    y_min: float = 0.0
    y_max: float = 40.0
    y_steps: int = 41
    time_sharing: bool = False
    rows: list[ScanRow] = field(default_factory=list)

    def __post_init__(self):
        if self.axes not in ("a-p", "snr-inr"):
            raise ValueError(f"axes must be 'a-p' or 'snr-inr', got {self.axes!r}")
        for lo, hi, n, name in (
            (self.x_min, self.x_max, self.x_steps, "x"),
            (self.y_min, self.y_max, self.y_steps, "y"),
        ):
            if n < 1:
                raise ValueError(f"{name}_steps must be >= 1")
            if hi < lo or (n > 1 and hi == lo):
                raise ValueError(f"empty {name} range [{lo}, {hi}]")

    @property
    def x_values(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.x_steps)

    @property
    def y_values(self) -> np.ndarray:
        return np.linspace(self.y_min, self.y_max, self.y_steps)

    def to_channel(self, x: float, y: float) -> tuple[float, float]:
        if self.axes == "a-p":
            return float(x), float(db_to_linear(y))
        return float(db_to_linear(y - x)), float(db_to_linear(x))


def _row(x, y, a, p, time_sharing):
    if not (0.0 < a < 1.0) or not (p > 0.0 and math.isfinite(p)):
        return ScanRow(x, y, a, p, RegionLabel.OUT_OF_DOMAIN)
    ch = ChannelParams(a, p)
    sym, asym, orth = r_sym(ch), r_asym(ch), r_orth(ch)
    row = ScanRow(
        x,
        y,
        a,
        p,
        classify_rates(sym.rate, sym.split.lambda1, asym.rate, orth.rate),
        sym.rate,
        asym.rate,
        orth.rate,
        r_etw(ch).rate,
    )
    if time_sharing:
        row.r_ts = r_ts(ch).rate
        row.r_sason = r_sason(ch).rate
    return row


def scan(grid: GridScan) -> GridScan:
    """Fill one row per grid point, y-major; out-of-domain points get label 0."""
    rows = []
    for y in grid.y_values:
        for x in grid.x_values:
            a, p = grid.to_channel(x, y)
            rows.append(_row(float(x), float(y), a, p, grid.time_sharing))
    return replace(grid, rows=rows)


def ts_advantage(ch: ChannelParams) -> tuple[float, float]:
    """Gain of two-slot and four-slot time sharing over ``max(R_sym, R_asym, R_orth)``."""
    no_ts = max(r_rs(ch).rate, r_orth(ch).rate)
    return r_ts(ch).rate - no_ts, r_sason(ch).rate - no_ts
