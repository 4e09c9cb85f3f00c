import logging
from typing import Optional

import numpy as np

from ..grid import BoundaryKind, CellField, extend_with_ghosts, sample_at_centers
from ..grid.grid import MESH_RTOL
from ..laws import ModelSpec
from ..scheme import NonFiniteStateError, compute_dt
from .godunov import godunov_scalar_flux
from .model import Limiter, ReferenceConfig

logger = logging.getLogger(__name__)


def minmod(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.where(a * b > 0.0, np.where(np.abs(a) < np.abs(b), a, b), 0.0)


limiters = {
    Limiter.MINMOD: minmod,
}


def muscl_hancock_step(q: np.ndarray, dt: float, dx: float, model: ModelSpec, bc: BoundaryKind,
                       limiter=minmod) -> np.ndarray:
    extended = extend_with_ghosts(CellField(q), bc, 2)
    # cells 0..n+1 of `center` are the interior cells plus one ghost on each side
    center = extended[1:-1]
    slope = limiter(center - extended[:-2], extended[2:] - center)
    minus = center - 0.5 * slope
    plus = center + 0.5 * slope

    # Hancock predictor: evolve the boundary-extrapolated values by dt/2
    shift = -0.5 * dt / dx * (model.flux(plus) - model.flux(minus)) + 0.5 * dt * model.source(center)
    minus = minus + shift
    plus = plus + shift

    faces = godunov_scalar_flux(plus[:-1], minus[1:], model.flux, model.sonic_point)
    half = (center + shift)[1:-1]
    return q - dt / dx * (faces[1:] - faces[:-1]) + dt * model.source(half)


def muscl_hancock_solve(model: ModelSpec, rc: Optional[ReferenceConfig] = None,
                        t_final: Optional[float] = None) -> CellField:
    """
    Second-order MUSCL-Hancock reference solution on rc.n_cells cells at t_final.
    The time step follows the CFL condition of the current state; the last
    step is shortened to land exactly on t_final.
    """
    rc = rc or ReferenceConfig()
    t_final = model.defaults.t_final if t_final is None else t_final
    if not t_final > 0:
        raise ValueError(f't_final must be positive, got {t_final}')
    limiter = limiters[rc.limiter]
    grid = model.grid(rc.n_cells)

    q = sample_at_centers(grid, model.initial_condition).values
    t = 0.0
    n_steps = 0
    while t_final - t > MESH_RTOL * t_final:
        dt = min(compute_dt(CellField(q), model, rc.cfl, grid.dx), t_final - t)
        q = muscl_hancock_step(q, dt, grid.dx, model, model.bc, limiter)
        n_steps += 1
        if not np.all(np.isfinite(q)):
            raise NonFiniteStateError(f'{model.name}: reference solve blew up at step {n_steps}, t={t:g}',
                                      step=n_steps)
        t += dt

    logger.info("%s: MUSCL-Hancock reference on %d cells reached t=%g in %d steps", model.name, grid.n_cells,
                t_final, n_steps)
    return CellField(q)
