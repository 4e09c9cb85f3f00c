from .model import RunDefaults, ModelSpec, FluxConvexity, HypothesisReport
from .advection import model_advection_reaction
from .burgers import model_burgers
from .traffic import model_traffic
from .hypotheses import check_hypotheses
from .laws import UnknownModelError, get_model, model_names
