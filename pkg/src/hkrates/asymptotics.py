"""High-SNR sum-rate offsets ``lim (R - log2 P)`` at fixed ``a``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .optimizers import r_asym, r_etw, r_orth, r_sym
from .rates import ChannelParams
from .search import BracketError, bisect

__all__ = [
    "OFFSET_SCHEMES",
    "OffsetCurve",
    "NoCrossoverError",
    "delta_offset",
    "offset_curve",
    "crossover",
    "offset_convergence",
    "asymptotic_lambda_sym",
    "asymptotic_lambda_asym",
]

OFFSET_SCHEMES = ("Sym", "Asym", "ETW", "Orth")

_FINITE_P = {"Sym": r_sym, "Asym": r_asym, "ETW": r_etw, "Orth": r_orth}


class NoCrossoverError(ValueError):
    pass


@dataclass(frozen=True)
class OffsetCurve:
    scheme: str
    a: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if np.any((self.a <= 0) | (self.a >= 1)):
            raise ValueError("offset curve samples must lie strictly inside (0, 1)")


def _check_scheme(scheme):
    if scheme not in OFFSET_SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {OFFSET_SCHEMES}")


def delta_offset(scheme: str, a: float) -> float:
    """Asymptotic offset in bits of ``scheme`` at interference coefficient ``a``."""
    _check_scheme(scheme)
    if scheme == "Orth":
        return 1.0
    if not 0.0 < a < 1.0:
        raise ValueError(f"a={a!r} outside (0, 1)")
    if scheme == "Sym":
        return math.log2((1.0 + a) ** 3 / (4.0 * a))
    if scheme == "Asym":
        return math.log2((1.0 + a) / math.sqrt(a))
    return math.log2((2.0 * a + 1.0) * (a + 1.0) / (4.0 * a))


def offset_curve(scheme: str, a_values) -> OffsetCurve:
    a = np.asarray(a_values, dtype=float)
    vals = np.array([delta_offset(scheme, float(x)) for x in a])
    return OffsetCurve(scheme, a, vals)


def crossover(scheme_a: str, scheme_b: str, lo=1e-4, hi=1.0 - 1e-4, tol=1e-12) -> float:
    """Value of ``a`` where the two offset curves meet, by bisection.

    Raises NoCrossoverError when the difference keeps one sign on ``[lo, hi]``.
    """
    _check_scheme(scheme_a)
    _check_scheme(scheme_b)

    def diff(x):
        return delta_offset(scheme_a, x) - delta_offset(scheme_b, x)

    try:
        return bisect(diff, lo, hi, ftol=tol, xtol=1e-15)
    except BracketError as exc:
        raise NoCrossoverError(
            f"{scheme_a} and {scheme_b} offsets do not cross on [{lo}, {hi}]"
            f" (differences {exc.f_lo:.6g}, {exc.f_hi:.6g})"
        ) from None


def offset_convergence(scheme: str, a: float, p_list) -> list[tuple[float, float]]:
    """Finite-power offsets ``(P, R(a, P) - log2 P)`` for convergence checks."""
    _check_scheme(scheme)
    p_arr = np.asarray(p_list, dtype=float)
    if np.any(p_arr <= 0) or np.any(np.diff(p_arr) <= 0):
        raise ValueError("p_list must be positive and strictly ascending")
    fn = _FINITE_P[scheme]
    return [(float(p), fn(ChannelParams(a, p)).rate - math.log2(p)) for p in p_arr]


def asymptotic_lambda_sym(a: float, p: float) -> float:
    return (1.0 - a) / ((1.0 + a) * a * p)


def asymptotic_lambda_asym(a: float) -> float:
    return a**1.5 / (1.0 + a - math.sqrt(a))
