"""Bracketing root finder used across the package."""

from __future__ import annotations

import math
from typing import Callable

__all__ = ["bisect_root"]


def bisect_root(f: Callable[[float], float], lo: float, hi: float, *,
                rtol: float = 1e-13, atol: float = 0.0, maxiter: int = 200) -> float:
    """Root of a function that is positive near ``lo`` and negative near ``hi``.

    The bracket is halved until its width drops below
    ``max(atol, rtol * max(|lo|, |hi|))`` or ``maxiter`` halvings were done.
    Endpoint values are never evaluated, so ``f`` may be undefined there.
    Pass ``lambda x: -g(x)`` for an increasing ``g``.
    """
    if not lo < hi:
        raise ValueError(f"empty bracket [{lo}, {hi}]")
    for _ in range(maxiter):
        if hi - lo <= max(atol, rtol * max(abs(lo), abs(hi))):
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if math.isnan(fm):
            raise ValueError(f"function is NaN at {mid}")
        if fm == 0.0:
            return mid
        if fm > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)

