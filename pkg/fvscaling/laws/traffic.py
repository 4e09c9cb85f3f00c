import numpy as np

from ..config import settings
from ..grid import BoundaryKind
from .model import ModelSpec, RunDefaults

NAME = "traffic"

# densities upstream (left) and downstream (right) of the jam front at x = 0.5
LEFT_STATE = 2.2
RIGHT_STATE = 0.2


def smoothed_sign(x, delta):
    """(x - 1/2) / sqrt((x - 1/2)^2 + delta), a smooth step from -1 to 1 across x = 1/2."""
    xi = np.asarray(x, dtype=np.float64) - 0.5
    return xi / np.sqrt(xi * xi + delta)


def model_traffic(r: float = 2.0, u_max: float = 3.0, q_max: float = 0.8,
                  delta: float = settings.traffic_delta) -> ModelSpec:
    """
    LWR traffic model with a cubic source,
    q_t + (q u_max (1 - q/q_max))_x = r q^3, with transmissive boundaries.
    The flux is concave with its maximum at q = q_max/2.
    """
    if u_max <= 0 or q_max <= 0:
        raise ValueError(f'u_max and q_max must be positive, got {u_max}, {q_max}')

    def flux(q):
        q = np.asarray(q, dtype=np.float64)
        return q * u_max * (1.0 - q / q_max)

    def wave_speed(q):
        return u_max * (1.0 - 2.0 * np.asarray(q, dtype=np.float64) / q_max)

    def source(q):
        return r * np.asarray(q, dtype=np.float64) ** 3

    def initial_condition(x):
        c = smoothed_sign(x, delta)
        return RIGHT_STATE * (1.0 + c) / 2.0 + LEFT_STATE * (1.0 - c) / 2.0

    return ModelSpec(
        name=NAME,
        flux=flux,
        wave_speed=wave_speed,
        source=source,
        initial_condition=initial_condition,
        bc=BoundaryKind.TRANSMISSIVE,
        defaults=RunDefaults(
            n_cells=100,
            cfl=0.5,
            alpha=2.0,
            t_final=0.02,
            tol=1e-7,
            reference_cells=1000,
        ),
        sonic_point=0.5 * q_max,
    )
