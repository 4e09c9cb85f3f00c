"""
FORCE-alpha numerical flux, the mean of alpha-modified Lax-Friedrichs and
Lax-Wendroff fluxes. alpha = 1 gives the classic FORCE flux; larger alpha
lowers the numerical dissipation at small CFL numbers.

All fluxes take left/right states as floats or equally shaped arrays.
"""
import numpy as np

from .model import SchemeParams


def lf_alpha_flux(q_left, q_right, f, p: SchemeParams):
    q_left = np.asarray(q_left, dtype=np.float64)
    q_right = np.asarray(q_right, dtype=np.float64)
    return 0.5 * (f(q_left) + f(q_right)) - p.dx / (2.0 * p.alpha * p.dt) * (q_right - q_left)


def lw_alpha_state(q_left, q_right, f, p: SchemeParams):
    q_left = np.asarray(q_left, dtype=np.float64)
    q_right = np.asarray(q_right, dtype=np.float64)
    return 0.5 * (q_left + q_right) - p.alpha * p.dt / (2.0 * p.dx) * (f(q_right) - f(q_left))


def lw_alpha_flux(q_left, q_right, f, p: SchemeParams):
    return f(lw_alpha_state(q_left, q_right, f, p))


def force_alpha_flux(q_left, q_right, f, p: SchemeParams):
    return 0.5 * (lw_alpha_flux(q_left, q_right, f, p) + lf_alpha_flux(q_left, q_right, f, p))
