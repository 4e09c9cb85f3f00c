from typing import Optional

import numpy as np


def godunov_scalar_flux(q_left, q_right, f, sonic_point: Optional[float] = None):
    """
    Exact Riemann flux of a scalar conservation law:
    min of f over [q_left, q_right] when q_left <= q_right, max over
    [q_right, q_left] otherwise.

    The extremum is searched among the interval ends and, if given, the sonic
    point clamped into the interval. That is exact for fluxes with at most one
    critical point (convex, concave or monotone).
    """
    q_left = np.asarray(q_left, dtype=np.float64)
    q_right = np.asarray(q_right, dtype=np.float64)
    candidates = [f(q_left), f(q_right)]
    if sonic_point is not None:
        lower = np.minimum(q_left, q_right)
        upper = np.maximum(q_left, q_right)
        candidates.append(f(np.clip(sonic_point, lower, upper)))
    candidates = np.stack(np.broadcast_arrays(*candidates))
    return np.where(q_left <= q_right, candidates.min(axis=0), candidates.max(axis=0))
