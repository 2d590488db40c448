"""Derivative-free 1-D root bracketing and box-constrained grid refinement."""

from __future__ import annotations

import math

import numpy as np


class BracketError(ValueError):
    """Raised when a bracketing interval has no sign change."""

    def __init__(self, lo, hi, f_lo, f_hi):
        super().__init__(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )
        self.lo, self.hi, self.f_lo, self.f_hi = lo, hi, f_lo, f_hi


def bisect(f, lo, hi, ftol=1e-12, xtol=1e-14, maxiter=200):
    """Bisection on ``[lo, hi]``; returns the root estimate.

    Stops when ``|f(x)| < ftol`` or the interval is shorter than ``xtol``.
    An endpoint with ``|f| < ftol`` is returned directly.
    """
    f_lo, f_hi = f(lo), f(hi)
    if abs(f_lo) < ftol:
        return lo
    if abs(f_hi) < ftol:
        return hi
    if math.copysign(1.0, f_lo) == math.copysign(1.0, f_hi):
        raise BracketError(lo, hi, f_lo, f_hi)
    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if abs(f_mid) < ftol or hi - lo < xtol:
            return mid
        if math.copysign(1.0, f_mid) == math.copysign(1.0, f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def zoom_maximize(f, center, width, lower, upper, points=21, xtol=1e-10, maxiter=400):
    """Maximize ``f`` near ``center`` by repeated box grids.

    ``f`` takes one broadcastable array per coordinate.  Each round evaluates a
    ``points**d`` grid of half-width ``width`` around the incumbent.  When the
    new best sits on an interior face of the box the box is re-centred at the
    same width, so the search can travel along a narrow ridge; otherwise the
    width halves.  Returns ``(value, coords)``.
    """
    c = np.array(center, dtype=float)
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    w = np.broadcast_to(np.asarray(width, dtype=float), c.shape).copy()
    best = float(f(*c))
    offsets = np.linspace(-1.0, 1.0, points)
    for _ in range(maxiter):
        if np.all(w < xtol):
            break
        axes = [np.clip(ci + wi * offsets, lo, hi) for ci, wi, lo, hi in zip(c, w, lower, upper)]
        grids = np.meshgrid(*axes, indexing="ij")
        vals = f(*grids)
        idx = np.unravel_index(int(np.argmax(vals)), vals.shape)
        if vals[idx] > best:
            best = float(vals[idx])
            c = np.array([g[idx] for g in grids])
            on_face = any(
                i in (0, points - 1) and lo < ci < hi
                for i, ci, lo, hi in zip(idx, c, lower, upper)
            )
            if on_face:
                continue
        w /= 2.0
    return best, c


def grid_argmax(f, axes):
    """Exhaustive maximum of ``f`` over the product of 1-D ``axes``.

    Ties resolve to the lexicographically smallest grid coordinates.
    """
    grids = np.meshgrid(*axes, indexing="ij")
    vals = f(*grids)
    idx = np.unravel_index(int(np.argmax(vals)), vals.shape)
    return float(vals[idx]), np.array([g[idx] for g in grids])


def top_candidates(vals, coords, k):
    """Indices of the ``k`` largest entries of ``vals`` in deterministic order."""
    k = min(k, vals.size)
    idx = np.argpartition(-vals, k - 1)[:k]
    order = np.lexsort(tuple(coords[j][idx] for j in reversed(range(len(coords)))) + (-vals[idx],))
    return idx[order]


__all__ = ["BracketError", "bisect", "zoom_maximize", "grid_argmax", "top_candidates"]
