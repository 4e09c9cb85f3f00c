import enum
import logging
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

logger = logging.getLogger(__name__)

# relative tolerance used for mesh bookkeeping (domain ends, t_final = n_steps * dt)
MESH_RTOL = 1e-12


class GridError(Exception):
    pass


class InvalidDomainError(GridError):
    pass


class IncompatibleGridsError(GridError):
    pass


class InvalidFieldError(GridError):
    pass


class BoundaryKind(enum.Enum):
    PERIODIC = "periodic"
    TRANSMISSIVE = "transmissive"


@dataclass(frozen=True)
class Grid:
    """
    Uniform partition of [a, b] into n_cells cells of width dx.
    Cell i covers [a + i*dx, a + (i+1)*dx] and is centred at a + (i+1/2)*dx.
    """
    a: float
    b: float
    n_cells: int
    dx: float = field(init=False, repr=False)
    centers: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (np.isfinite(self.a) and np.isfinite(self.b)) or self.b <= self.a:
            raise InvalidDomainError(f'invalid domain [{self.a}, {self.b}]')
        if int(self.n_cells) != self.n_cells or self.n_cells < 2:
            raise InvalidDomainError(f'at least 2 cells are required, got {self.n_cells}')
        dx = (self.b - self.a) / self.n_cells
        centers = self.a + (np.arange(self.n_cells) + 0.5) * dx
        centers.flags.writeable = False
        object.__setattr__(self, 'n_cells', int(self.n_cells))
        object.__setattr__(self, 'dx', dx)
        object.__setattr__(self, 'centers', centers)

    @property
    def length(self) -> float:
        return self.b - self.a

    def same_domain(self, other: 'Grid') -> bool:
        tol = MESH_RTOL * max(self.length, other.length)
        return abs(self.a - other.a) <= tol and abs(self.b - other.b) <= tol


@dataclass(frozen=True, eq=False)
class CellField:
    """One time level of cell averages."""
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise InvalidFieldError(f'cell field must be one-dimensional, got shape {values.shape}')
        if not np.all(np.isfinite(values)):
            raise InvalidFieldError('cell field holds non-finite values')
        values.flags.writeable = False
        object.__setattr__(self, 'values', values)

    def __len__(self):
        return self.values.shape[0]

    @property
    def n_cells(self) -> int:
        return len(self)

    def check_grid(self, grid: Grid) -> None:
        if self.n_cells != grid.n_cells:
            raise IncompatibleGridsError(
                f'field has {self.n_cells} cells, grid has {grid.n_cells}')


@dataclass(frozen=True, eq=False)
class SpaceTimeField:
    """
    Full history of one solve: levels[m, i] is the value in cell i at t = m * dt.
    levels[0] is the discretized initial condition.
    """
    levels: np.ndarray
    dt: float
    t_final: float

    def __post_init__(self):
        levels = np.array(self.levels, dtype=np.float64)
        if levels.ndim != 2 or levels.shape[0] < 2:
            raise InvalidFieldError(
                f'space-time field needs shape (n_steps + 1, n_cells), got {levels.shape}')
        if not (self.dt > 0 and self.t_final > 0):
            raise InvalidFieldError(f'dt and t_final must be positive, got {self.dt}, {self.t_final}')
        n_steps = levels.shape[0] - 1
        if abs(n_steps * self.dt - self.t_final) > MESH_RTOL * self.t_final:
            raise InvalidFieldError(
                f'{n_steps} steps of {self.dt} do not reach t_final={self.t_final}')
        if not np.all(np.isfinite(levels)):
            raise InvalidFieldError('space-time field holds non-finite values')
        levels.flags.writeable = False
        object.__setattr__(self, 'levels', levels)

    @classmethod
    def zeros(cls, n_cells: int, n_steps: int, dt: float) -> 'SpaceTimeField':
        return cls(levels=np.zeros((n_steps + 1, n_cells)), dt=dt, t_final=n_steps * dt)

    @property
    def n_steps(self) -> int:
        return self.levels.shape[0] - 1

    @property
    def n_cells(self) -> int:
        return self.levels.shape[1]

    def level(self, m: int) -> CellField:
        return CellField(self.levels[m])

    @property
    def final(self) -> CellField:
        return self.level(self.n_steps)


def build_grid(a: float, b: float, n_cells: int) -> Grid:
    return Grid(a=a, b=b, n_cells=n_cells)


def sample_at_centers(grid: Grid, func: Callable[[np.ndarray], np.ndarray]) -> CellField:
    """
    Discretize func by point values at the cell centers (not exact cell averages).
    """
    return CellField(np.broadcast_to(func(grid.centers), grid.centers.shape))


def extend_with_ghosts(field: CellField, bc: BoundaryKind, n_ghost: int) -> np.ndarray:
    """
    Pad a cell field with n_ghost ghost cells on each side.

    Periodic ghosts wrap around the domain, transmissive ghosts repeat the
    nearest interior value. The interior values are left untouched.
    """
    if n_ghost not in (1, 2):
        raise GridError(f'n_ghost must be 1 or 2, got {n_ghost}')
    if n_ghost > field.n_cells:
        raise GridError(f'{field.n_cells} cells cannot feed {n_ghost} ghost cells')
    if bc is BoundaryKind.PERIODIC:
        return np.pad(field.values, n_ghost, mode='wrap')
    if bc is BoundaryKind.TRANSMISSIVE:
        return np.pad(field.values, n_ghost, mode='edge')
    raise GridError(f'unknown boundary kind {bc!r}')


def restrict(fine: CellField, fine_grid: Grid, coarse_grid: Grid) -> CellField:
    """
    Project a fine-mesh field onto a coarser uniform mesh of the same domain.
    Each coarse value is the mean of the fine cells it covers, so the discrete
    integral is preserved.
    """
    fine.check_grid(fine_grid)
    if not fine_grid.same_domain(coarse_grid):
        raise IncompatibleGridsError(
            f'domains differ: [{fine_grid.a}, {fine_grid.b}] vs [{coarse_grid.a}, {coarse_grid.b}]')
    ratio, remainder = divmod(fine_grid.n_cells, coarse_grid.n_cells)
    if remainder != 0 or ratio < 1:
        raise IncompatibleGridsError(
            f'{fine_grid.n_cells} cells cannot be restricted onto {coarse_grid.n_cells} cells')
    return CellField(fine.values.reshape(coarse_grid.n_cells, ratio).mean(axis=1))


def sample_fine_at_centers(fine: CellField, fine_grid: Grid, coarse_grid: Grid) -> CellField:
    """
    Read a fine-mesh field at the centers of a coarser mesh of the same domain,
    by linear interpolation between the neighbouring fine cell centers. With an
    even refinement ratio every coarse center sits on a fine face and gets the
    mean of the two fine cells that share it.
    """
    fine.check_grid(fine_grid)
    if not fine_grid.same_domain(coarse_grid):
        raise IncompatibleGridsError(
            f'domains differ: [{fine_grid.a}, {fine_grid.b}] vs [{coarse_grid.a}, {coarse_grid.b}]')
    if fine_grid.n_cells < coarse_grid.n_cells:
        raise IncompatibleGridsError(
            f'{fine_grid.n_cells} cells cannot be sampled onto the finer mesh of {coarse_grid.n_cells} cells')
    return CellField(np.interp(coarse_grid.centers, fine_grid.centers, fine.values))
