from .model import SchemeError, DegenerateSpeedError, NonFiniteStateError, MeshMismatchError, \
    SchemeParams, Direct, Frozen, SourceMode
from .flux import lf_alpha_flux, lw_alpha_flux, force_alpha_flux
from .scheme import max_wave_speed, compute_dt, time_mesh, step, solve
