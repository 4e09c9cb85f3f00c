import numpy as np

from ..grid import BoundaryKind
from .model import ModelSpec, RunDefaults

NAME = "advection-reaction"
DOMAIN = (0.0, 1.0)


def gaussian_pulse(x):
    return np.exp(-100.0 * (np.asarray(x, dtype=np.float64) - 0.5) ** 2)


def wrap(x):
    """Map x back into the periodic domain [a, b)."""
    a, b = DOMAIN
    return a + np.mod(np.asarray(x, dtype=np.float64) - a, b - a)


def model_advection_reaction(lambda_: float = 1.0, r: float = 10.0) -> ModelSpec:
    """
    Linear advection with linear reaction,  q_t + (lambda q)_x = r q,
    periodic on [0, 1]. Along characteristics the pulse is transported at
    speed lambda and grows like exp(r t), which gives the closed form.
    """

    def flux(q):
        return lambda_ * np.asarray(q, dtype=np.float64)

    def wave_speed(q):
        return np.full_like(np.asarray(q, dtype=np.float64), lambda_)

    def source(q):
        return r * np.asarray(q, dtype=np.float64)

    def exact_solution(x, t):
        return gaussian_pulse(wrap(np.asarray(x, dtype=np.float64) - lambda_ * t)) * np.exp(r * t)

    return ModelSpec(
        name=NAME,
        flux=flux,
        wave_speed=wave_speed,
        source=source,
        initial_condition=gaussian_pulse,
        bc=BoundaryKind.PERIODIC,
        exact_solution=exact_solution,
        defaults=RunDefaults(
            n_cells=100,
            cfl=0.18,
            alpha=5.6,
            t_final=0.25,
            tol=1e-7,
            reference_cells=1000,
        ),
        domain=DOMAIN,
        sonic_point=None,
    )
