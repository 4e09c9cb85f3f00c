import enum

from pydantic import BaseModel, Field

from ..config import settings


class ReferenceSolutionError(Exception):
    pass


class WrongModelError(ReferenceSolutionError):
    pass


class Limiter(enum.Enum):
    MINMOD = "minmod"


class Projection(enum.Enum):
    # how a fine reference is brought onto the coarse mesh of a table
    SAMPLE = "sample"
    AVERAGE = "average"


class ReferenceConfig(BaseModel):
    n_cells: int = Field(settings.reference_cells, ge=2)
    cfl: float = Field(settings.reference_cfl, gt=0.0, le=1.0)
    limiter: Limiter = Limiter.MINMOD
    projection: Projection = Projection(settings.reference_projection)

    class Config:
        allow_mutation = False
        extra = 'forbid'
