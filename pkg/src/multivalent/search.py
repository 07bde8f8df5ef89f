"""One-dimensional minimization on an interval."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

INV_PHI = (math.sqrt(5) - 1) / 2


def golden_section(fun: Callable[[float], float], lo: float, hi: float, tol: float = 1e-10, max_iter: int = 500):
    """Minimize a unimodal ``fun`` on ``[lo, hi]``.

    Returns ``(x, fun(x))``.  The endpoints are compared against the interior
    estimate, so a minimum sitting on the boundary is returned exactly.
    """
    a, b = float(lo), float(hi)
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1, f2 = fun(x1), fun(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = fun(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = fun(x2)
    x = 0.5 * (a + b)
    best = (x, fun(x))
    for edge in (float(lo), float(hi)):
        fe = fun(edge)
        if np.isfinite(fe) and fe <= best[1]:
            best = (edge, fe)
    return best


def scan_then_golden(fun: Callable[[float], float], lo: float, hi: float, n_scan: int = 2049, tol: float = 1e-10):
    """Dense scan to bracket the global minimum, then golden-section refine."""
    xs = np.linspace(lo, hi, n_scan)
    with np.errstate(all="ignore"):
        vals = np.array([fun(x) for x in xs], dtype=float)
    vals[~np.isfinite(vals)] = np.inf
    i = int(np.argmin(vals))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, n_scan - 1)]
    return golden_section(fun, a, b, tol=tol)
