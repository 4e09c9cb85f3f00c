from .iteration import IterationError, DegenerateNormError, NoConvergenceError, IterationRow, IterationTrace, \
    sup_norm, iterate, direct_solution
