from .model import ReferenceSolutionError, WrongModelError, Limiter, Projection, ReferenceConfig
from .godunov import godunov_scalar_flux
from .muscl import minmod, muscl_hancock_step, muscl_hancock_solve
from .exact import exact_advection_reaction, reference_profile
from .golden import golden_path, save_profile, load_profile
