"""Han-Kobayashi achievable sum rates for the two-user symmetric Gaussian interference channel."""

from .asymptotics import crossover, delta_offset, offset_convergence
from .optimizers import (
    Oracle2DSpec,
    TimeShareConfig,
    brute_force_rs,
    r_asym,
    r_etw,
    r_orth,
    r_rs,
    r_sason,
    r_sym,
    r_ts,
    sym_regime,
)
from .rates import (
    ChannelParams,
    CommonRateBounds,
    PowerSplit,
    RateResult,
    common_bounds,
    gamma,
    hk_sum_rate,
    omega,
    phi,
    psi,
)
from .regions import GridScan, RegionLabel, boundary_scan, classify, scan, ts_advantage

__version__ = "0.1.0"
