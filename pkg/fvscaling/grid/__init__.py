from .grid import GridError, InvalidDomainError, IncompatibleGridsError, InvalidFieldError, \
    BoundaryKind, Grid, CellField, SpaceTimeField, build_grid, sample_at_centers, extend_with_ghosts, restrict, \
    sample_fine_at_centers
