from typing import Optional, Tuple

from ..grid import CellField, Grid
from ..laws import ModelSpec
from .model import ReferenceConfig, WrongModelError
from .muscl import muscl_hancock_solve


def exact_advection_reaction(model: ModelSpec, grid: Grid, t: float) -> CellField:
    if model.exact_solution is None:
        raise WrongModelError(f'{model.name} has no closed-form solution')
    return CellField(model.exact_solution(grid.centers, t))


def reference_profile(model: ModelSpec, rc: Optional[ReferenceConfig] = None,
                      t_final: Optional[float] = None) -> Tuple[Grid, CellField]:
    """
    Reference solution at t_final: the closed form when the model has one,
    the fine-mesh MUSCL-Hancock solve otherwise.
    """
    rc = rc or ReferenceConfig()
    t_final = model.defaults.t_final if t_final is None else t_final
    grid = model.grid(rc.n_cells)
    if model.exact_solution is not None:
        return grid, exact_advection_reaction(model, grid, t_final)
    return grid, muscl_hancock_solve(model, rc, t_final)
