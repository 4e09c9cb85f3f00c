import enum
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field

from ..config import settings
from ..grid import BoundaryKind, Grid, build_grid

ScalarFunction = Callable[[np.ndarray], np.ndarray]
SpaceTimeFunction = Callable[[np.ndarray, float], np.ndarray]


class RunDefaults(BaseModel):
    n_cells: int = Field(..., ge=2)
    cfl: float = Field(..., gt=0.0, le=1.0)
    alpha: float = Field(..., ge=1.0)
    t_final: float = Field(..., gt=0.0)
    tol: float = Field(..., gt=0.0)
    max_iters: int = Field(settings.max_iters, gt=0)
    reference_cells: int = Field(settings.reference_cells, ge=2)

    class Config:
        allow_mutation = False
        extra = 'forbid'

    def with_overrides(self, **overrides) -> 'RunDefaults':
        """
        Return a copy with the given fields replaced. None values are ignored.
        The merged values are validated again, so out-of-range overrides raise
        a pydantic ValidationError.
        """
        values = self.dict()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return RunDefaults(**values)


@dataclass(frozen=True)
class ModelSpec:
    """
    Scalar balance law  q_t + f(q)_x = s(q)  on `domain`, with its initial
    condition, boundary treatment and the run parameters of its experiment.
    All callables act elementwise on numpy arrays.
    """
    name: str
    flux: ScalarFunction
    wave_speed: ScalarFunction
    source: ScalarFunction
    initial_condition: ScalarFunction
    bc: BoundaryKind
    defaults: RunDefaults
    exact_solution: Optional[SpaceTimeFunction] = None
    domain: Tuple[float, float] = (0.0, 1.0)
    # state where wave_speed vanishes (extremum of a convex/concave flux)
    sonic_point: Optional[float] = None

    def grid(self, n_cells: Optional[int] = None) -> Grid:
        return build_grid(self.domain[0], self.domain[1], n_cells or self.defaults.n_cells)


class FluxConvexity(enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"
    INDEFINITE = "indefinite"


@dataclass(frozen=True)
class HypothesisReport:
    source_vanishes_at_zero: bool
    lipschitz_estimate: float
    flux_convexity: FluxConvexity
    flux_origin_conditions: bool

    def as_lines(self):
        yield f'source_vanishes_at_zero={str(self.source_vanishes_at_zero).lower()}'
        yield f'lipschitz_estimate={self.lipschitz_estimate:.9g}'
        yield f'flux_convexity={self.flux_convexity.value}'
        yield f'flux_origin_conditions={str(self.flux_origin_conditions).lower()}'
