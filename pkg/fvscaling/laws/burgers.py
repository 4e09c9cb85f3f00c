import numpy as np

from ..grid import BoundaryKind
from .model import ModelSpec, RunDefaults

NAME = "burgers"


def flux(q):
    q = np.asarray(q, dtype=np.float64)
    return 0.5 * q * q


def wave_speed(q):
    return np.array(q, dtype=np.float64)


def source(q):
    return np.asarray(q, dtype=np.float64) ** 4


def initial_condition(x):
    return np.sin(2.0 * np.pi * np.asarray(x, dtype=np.float64)) ** 4


def model_burgers() -> ModelSpec:
    """Inviscid Burgers equation with the quartic source  q_t + (q^2/2)_x = q^4, periodic on [0, 1]."""
    return ModelSpec(
        name=NAME,
        flux=flux,
        wave_speed=wave_speed,
        source=source,
        initial_condition=initial_condition,
        bc=BoundaryKind.PERIODIC,
        defaults=RunDefaults(
            n_cells=100,
            cfl=0.5,
            alpha=2.55,
            t_final=0.12,
            tol=1e-7,
            reference_cells=1000,
        ),
        sonic_point=0.0,
    )
