from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from ..grid import SpaceTimeField


class SchemeError(Exception):
    pass


class DegenerateSpeedError(SchemeError):
    pass


class NonFiniteStateError(SchemeError):
    def __init__(self, message: str, step: Optional[int] = None):
        super().__init__(message)
        self.step = step


class MeshMismatchError(SchemeError):
    pass


@dataclass(frozen=True)
class SchemeParams:
    cfl: float
    alpha: float
    dx: float
    dt: float

    def __post_init__(self):
        if not 0.0 < self.cfl <= 1.0:
            raise SchemeError(f'cfl must lie in (0, 1], got {self.cfl}')
        if not self.alpha >= 1.0:
            raise SchemeError(f'alpha must be at least 1, got {self.alpha}')
        if not (np.isfinite(self.dx) and self.dx > 0.0):
            raise SchemeError(f'dx must be positive and finite, got {self.dx}')
        if not (np.isfinite(self.dt) and self.dt > 0.0):
            raise SchemeError(f'dt must be positive and finite, got {self.dt}')

    @property
    def ratio(self) -> float:
        return self.dt / self.dx


@dataclass(frozen=True)
class Direct:
    """Source evaluated on the evolving state, S_i = s(q_i^n)."""


@dataclass(frozen=True)
class Frozen:
    """Source evaluated on a stored space-time field, S_i = s(w(x_i, t^n))."""
    field: SpaceTimeField


SourceMode = Union[Direct, Frozen]
