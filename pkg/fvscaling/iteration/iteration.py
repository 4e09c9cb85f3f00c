import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..grid import CellField, Grid, SpaceTimeField
from ..laws import ModelSpec, RunDefaults
from ..scheme import Direct, Frozen, solve, time_mesh

logger = logging.getLogger(__name__)


class IterationError(Exception):
    pass


class DegenerateNormError(IterationError):
    pass


class NoConvergenceError(IterationError):
    def __init__(self, trace: 'IterationTrace'):
        super().__init__(
            f'{trace.model_name}: no convergence after {trace.iterations_used} iterations '
            f'(last E_n = {trace.rows[-1].e_n}, tol = {trace.settings.tol})')
        self.trace = trace


@dataclass(frozen=True)
class IterationRow:
    n: int
    beta: float
    # |beta_{n-1} - beta_n|, undefined for the first iterate
    e_n: Optional[float] = None


@dataclass(frozen=True, eq=False)
class IterationTrace:
    model_name: str
    settings: RunDefaults
    rows: Tuple[IterationRow, ...]
    final_field: SpaceTimeField
    converged: bool
    # final-time level of every iterate, snapshots[k] belongs to rows[k]
    snapshots: Tuple[CellField, ...]

    @property
    def iterations_used(self) -> int:
        return len(self.rows)

    @property
    def beta(self) -> float:
        return self.rows[-1].beta

    def raise_for_convergence(self) -> 'IterationTrace':
        if not self.converged:
            raise NoConvergenceError(self)
        return self


def sup_norm(w: SpaceTimeField) -> float:
    """Maximum of |w| over every time level (the initial one included) and every cell center."""
    return float(np.max(np.abs(w.levels)))


def _resolve(model: ModelSpec, grid: Optional[Grid], cfg: Optional[RunDefaults]) -> Tuple[Grid, RunDefaults]:
    cfg = cfg or model.defaults
    return grid or model.grid(cfg.n_cells), cfg


def iterate(model: ModelSpec, grid: Optional[Grid] = None, cfg: Optional[RunDefaults] = None,
            on_row: Optional[Callable[[IterationRow], None]] = None) -> IterationTrace:
    """
    Scaling iteration for  q_t + f(q)_x = s(q).

    Starting from w^0 = 0 and beta_0 = 1, every pass solves the auxiliary
    problem  w_t + f(w)_x = s(w^n)  with the source frozen on the previous
    iterate, then sets beta_{n+1} = 1 / ||w^{n+1}||. The loop stops once
    E_n = |beta_n - beta_{n+1}| <= cfg.tol, or after cfg.max_iters solves.

    The iterate is stored as w^n = beta_n v^n directly, since the frozen
    source s(beta_n v^n) only needs w^n. Only the previous and current
    space-time fields are kept; older iterates survive as rows and final-time
    snapshots.
    """
    grid, cfg = _resolve(model, grid, cfg)
    dt, n_steps = time_mesh(model, grid, cfg.cfl, cfg.t_final)

    w = SpaceTimeField.zeros(grid.n_cells, n_steps, dt)
    beta = 1.0
    rows: List[IterationRow] = []
    snapshots: List[CellField] = []
    converged = False

    for n in range(1, cfg.max_iters + 1):
        w_next = solve(model, grid, n_steps, dt, cfg.alpha, Frozen(w))
        norm = sup_norm(w_next)
        if norm == 0.0:
            raise DegenerateNormError(f'{model.name}: iterate {n} vanishes identically, beta is undefined')
        beta_next = 1.0 / norm
        e_n = None if n == 1 else abs(beta - beta_next)

        row = IterationRow(n=n, beta=beta_next, e_n=e_n)
        rows.append(row)
        snapshots.append(w_next.final)
        logger.info("%s: n=%d beta=%.9f E=%s", model.name, n, beta_next, 'n/a' if e_n is None else f'{e_n:.3e}')
        if on_row is not None:
            on_row(row)

        w, beta = w_next, beta_next
        if e_n is not None and e_n <= cfg.tol:
            converged = True
            break

    if not converged:
        logger.warning("%s: no convergence within %d iterations (tol=%g)", model.name, cfg.max_iters, cfg.tol)

    return IterationTrace(
        model_name=model.name,
        settings=cfg,
        rows=tuple(rows),
        final_field=w,
        converged=converged,
        snapshots=tuple(snapshots),
    )


def direct_solution(model: ModelSpec, grid: Optional[Grid] = None, cfg: Optional[RunDefaults] = None) -> SpaceTimeField:
    """Conventional one-step solve, S_i = s(q_i^n), on the time mesh shared with `iterate`."""
    grid, cfg = _resolve(model, grid, cfg)
    dt, n_steps = time_mesh(model, grid, cfg.cfl, cfg.t_final)
    return solve(model, grid, n_steps, dt, cfg.alpha, Direct())
