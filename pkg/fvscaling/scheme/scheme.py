import logging
import math
from typing import Sequence, Tuple

import numpy as np

from ..grid import BoundaryKind, CellField, Grid, SpaceTimeField, extend_with_ghosts, sample_at_centers
from ..grid.grid import MESH_RTOL
from ..laws import ModelSpec
from .flux import force_alpha_flux
from .model import Direct, DegenerateSpeedError, Frozen, MeshMismatchError, NonFiniteStateError, SchemeError, \
    SchemeParams, SourceMode

logger = logging.getLogger(__name__)

MIN_SPEED = 1e-12


def max_wave_speed(field: CellField, model: ModelSpec) -> float:
    return float(np.max(np.abs(model.wave_speed(field.values))))


def compute_dt(field: CellField, model: ModelSpec, cfl: float, dx: float) -> float:
    """CFL time step  dt = cfl * dx / max_i |lambda(q_i)|."""
    speed = max_wave_speed(field, model)
    if speed < MIN_SPEED:
        raise DegenerateSpeedError(f'{model.name}: maximal wave speed {speed:g} is too small to set a time step')
    return cfl * dx / speed


def time_mesh(model: ModelSpec, grid: Grid, cfl: float, t_final: float) -> Tuple[float, int]:
    """
    Time step shared by every solve of a run. The CFL step of the initial
    condition is shortened so that an integer number of steps lands on t_final.
    """
    ic = sample_at_centers(grid, model.initial_condition)
    dt_cfl = compute_dt(ic, model, cfl, grid.dx)
    n_steps = max(1, math.ceil(t_final / dt_cfl * (1.0 - MESH_RTOL)))
    dt = t_final / n_steps
    logger.info("%s: shared time mesh dt=%.6g, n_steps=%d (cfl=%g, dx=%g)", model.name, dt, n_steps, cfl, grid.dx)
    return dt, n_steps


def _advance(q: np.ndarray, source_values: np.ndarray, model: ModelSpec, p: SchemeParams,
             bc: BoundaryKind) -> np.ndarray:
    extended = extend_with_ghosts(CellField(q), bc, 1)
    faces = force_alpha_flux(extended[:-1], extended[1:], model.flux, p)
    return q - p.ratio * (faces[1:] - faces[:-1]) + p.dt * source_values


def step(prev: CellField, source_values: Sequence[float], model: ModelSpec, p: SchemeParams,
         bc: BoundaryKind) -> CellField:
    """
    One explicit update
        q_i^{n+1} = q_i^n - dt/dx (F_{i+1/2} - F_{i-1/2}) + dt S_i
    with FORCE-alpha intercell fluxes.
    """
    source_values = np.asarray(source_values, dtype=np.float64)
    if source_values.shape != prev.values.shape:
        raise MeshMismatchError(f'{source_values.shape[0]} source values for {prev.n_cells} cells')
    values = _advance(prev.values, source_values, model, p, bc)
    if not np.all(np.isfinite(values)):
        raise NonFiniteStateError(f'{model.name}: update produced non-finite values')
    return CellField(values)


def _check_payload(payload: SpaceTimeField, grid: Grid, n_steps: int, dt: float) -> None:
    if payload.n_cells != grid.n_cells or payload.n_steps != n_steps:
        raise MeshMismatchError(
            f'frozen source has {payload.n_steps} steps x {payload.n_cells} cells, '
            f'solve expects {n_steps} x {grid.n_cells}')
    if abs(payload.dt - dt) > MESH_RTOL * dt:
        raise MeshMismatchError(f'frozen source dt={payload.dt} differs from solve dt={dt}')


def solve(model: ModelSpec, grid: Grid, n_steps: int, dt: float, alpha: float,
          mode: SourceMode = Direct()) -> SpaceTimeField:
    """
    March the first-order scheme over n_steps steps of size dt from the sampled
    initial condition. In Direct mode the source is s(q^n); in Frozen mode it is
    s(w^n) with w^n the matching level of the stored field.
    """
    if isinstance(mode, Frozen):
        _check_payload(mode.field, grid, n_steps, dt)
    elif not isinstance(mode, Direct):
        raise SchemeError(f'unknown source mode {mode!r}')

    ic = sample_at_centers(grid, model.initial_condition)
    courant = dt * max_wave_speed(ic, model) / grid.dx
    if courant > 1.0 + MESH_RTOL:
        raise SchemeError(f'{model.name}: dt={dt:g} gives Courant number {courant:g} > 1')
    p = SchemeParams(cfl=min(courant, 1.0) if courant > 0.0 else 1.0, alpha=alpha, dx=grid.dx, dt=dt)

    levels = np.empty((n_steps + 1, grid.n_cells))
    levels[0] = ic.values
    for m in range(n_steps):
        q = levels[m]
        frozen = mode.field.levels[m] if isinstance(mode, Frozen) else q
        try:
            levels[m + 1] = step(CellField(q), model.source(frozen), model, p, model.bc).values
        except NonFiniteStateError as e:
            raise NonFiniteStateError(f'{model.name}: non-finite state at step {m + 1} of {n_steps}',
                                      step=m + 1) from e

    logger.debug("%s: %s solve done, %d steps, max |q(T)| = %.6g", model.name, type(mode).__name__, n_steps,
                 np.max(np.abs(levels[-1])))
    return SpaceTimeField(levels=levels, dt=dt, t_final=n_steps * dt)
